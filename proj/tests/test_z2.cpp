#include <doctest.h>

#include <random>
#include <set>

#include "rfhkit/mb/rfh_complex.hpp"
#include "rfhkit/z2/action.hpp"
#include "rfhkit/z2/complex_json.hpp"

using namespace rfh::z2;

namespace {

// Apply d to the vector whose bits are the coordinates of v.
unsigned apply_bits(const Gf2Matrix& d, unsigned v) {
    unsigned out = 0;
    for (std::size_t r = 0; r < d.rows(); ++r) {
        bool bit = false;
        for (std::size_t c = 0; c < d.cols(); ++c) bit ^= ((v >> c) & 1u) && d.get(r, c);
        if (bit) out |= 1u << r;
    }
    return out;
}

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    REQUIRE((std::size_t{1} << k) == n);
    return k;
}

// Homology by enumerating every chain: dim ker from the number of cycles, dim im from the
// number of distinct boundaries.
DegreeDims brute_force_homology(const GradedComplexZ2& c) {
    DegreeDims out;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        const std::size_t dk = c.dim(k);
        std::size_t cycles = 0;
        const Gf2Matrix dout = c.boundary(k);
        for (unsigned v = 0; v < (1u << dk); ++v)
            if (k == c.lo() || apply_bits(dout, v) == 0) ++cycles;
        std::set<unsigned> bounds{0};
        if (k < c.hi()) {
            const Gf2Matrix din = c.boundary(k + 1);
            for (unsigned v = 0; v < (1u << c.dim(k + 1)); ++v) bounds.insert(apply_bits(din, v));
        }
        out[k] = static_cast<std::size_t>(log2_exact(cycles) - log2_exact(bounds.size()));
    }
    return out;
}

// Random complex with d^2 = 0: each column of d_{k+1} is a random cycle of degree k.
GradedComplexZ2 random_complex(std::mt19937& rng, int lo, const std::vector<std::size_t>& dims) {
    GradedComplexZ2 c(lo, dims);
    std::bernoulli_distribution coin(0.5);
    for (int k = lo + 1; k <= c.hi(); ++k) {
        std::vector<unsigned> cycles;
        const Gf2Matrix below = c.boundary(k - 1);
        for (unsigned v = 0; v < (1u << c.dim(k - 1)); ++v)
            if (k - 1 == lo || apply_bits(below, v) == 0) cycles.push_back(v);
        std::uniform_int_distribution<std::size_t> pick(0, cycles.size() - 1);
        Gf2Matrix d(c.dim(k - 1), c.dim(k));
        for (std::size_t col = 0; col < d.cols(); ++col) {
            const unsigned v = coin(rng) ? cycles[pick(rng)] : 0;
            for (std::size_t r = 0; r < d.rows(); ++r) d.set(r, col, (v >> r) & 1u);
        }
        c.set_boundary(k, d);
    }
    return c;
}

std::size_t span_size(const Gf2Matrix& m) {
    std::set<std::vector<int>> seen;
    const auto rows = m.to_rows();
    for (unsigned mask = 0; mask < (1u << rows.size()); ++mask) {
        std::vector<int> acc(m.cols(), 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if ((mask >> r) & 1u)
                for (std::size_t c = 0; c < m.cols(); ++c) acc[c] ^= rows[r][c];
        seen.insert(acc);
    }
    return seen.size();
}

}  // namespace

TEST_CASE("matrix basics") {
    const Gf2Matrix a = Gf2Matrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK(a.get(0, 1));
    CHECK_FALSE(a.get(1, 0));
    CHECK(a.transpose().transpose() == a);
    CHECK((a + a).is_zero());
    CHECK(Gf2Matrix::identity(3) * a.transpose() == a.transpose());
    const Gf2Matrix p = Gf2Matrix::permutation({1, 2, 0});
    CHECK(p.get(1, 0));
    CHECK(p.get(2, 1));
    CHECK(p.get(0, 2));
    CHECK(p.rank() == 3);
    CHECK(Gf2Matrix::ones(4, 4).rank() == 1);
    CHECK_THROWS_AS(Gf2Matrix::from_rows({{1, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(a * a, std::invalid_argument);
}

TEST_CASE("rank matches span enumeration") {
    std::mt19937 rng(7);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 70;
        Gf2Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, coin(rng));
        CHECK((std::size_t{1} << m.rank()) == span_size(m));
        CHECK(m.rank() == m.transpose().rank());
    }
}

TEST_CASE("homology equals brute force on small complexes") {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 300) {
        const std::size_t len = 2 + rng() % 4;
        std::vector<std::size_t> dims(len);
        std::size_t total = 0;
        for (auto& d : dims) total += (d = rng() % 5);
        if (total > 12) continue;
        const GradedComplexZ2 c = random_complex(rng, static_cast<int>(rng() % 5) - 2, dims);
        verify_complex(c);
        const DegreeDims h = homology_dims(c);
        CHECK(h == brute_force_homology(c));
        long euler_c = 0, euler_h = 0;
        for (int k = c.lo(); k <= c.hi(); ++k) {
            const long sign = (k % 2 == 0) ? 1 : -1;
            euler_c += sign * static_cast<long>(c.dim(k));
            euler_h += sign * static_cast<long>(h.at(k));
        }
        CHECK(euler_c == euler_h);
        ++checked;
    }
}

TEST_CASE("verify_complex rejects bad boundaries") {
    GradedComplexZ2 c(0, {1, 1, 1});
    c.set_boundary(1, Gf2Matrix::from_rows({{1}}));
    c.set_boundary(2, Gf2Matrix::from_rows({{1}}));
    CHECK_THROWS_WITH_AS(verify_complex(c), doctest::Contains("d^2 != 0"), std::invalid_argument);
    CHECK_THROWS_AS(c.set_boundary(1, Gf2Matrix(2, 1)), std::invalid_argument);
}

TEST_CASE("free orbits and quotients") {
    CHECK(free_orbits({1, 2, 0, 4, 5, 3}, 3).size() == 2);
    CHECK_THROWS_AS(free_orbits({1, 0, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(free_orbits({0, 0}, 1), std::invalid_argument);

    // Two points swapped, each with its own edge: quotient is one point, one edge.
    GradedComplexZ2 c(0, {2, 2});
    c.set_boundary(1, Gf2Matrix::from_rows({{1, 0}, {0, 1}}));
    c.set_labels(0, {"a", "b"});
    DegreeAction swap{2, {{0, {1, 0}}, {1, {1, 0}}}};
    const GradedComplexZ2 q = quotient_by_action(c, swap);
    CHECK(q.dim(0) == 1);
    CHECK(q.dim(1) == 1);
    CHECK(q.boundary(1) == Gf2Matrix::from_rows({{1}}));
    CHECK(q.labels(0) == std::vector<std::string>{"[a]"});

    DegreeAction bad{2, {{0, {1, 0}}}};  // identity in degree 1 is not free
    CHECK_THROWS_AS(quotient_by_action(c, bad), std::invalid_argument);
    GradedComplexZ2 skew(0, {2, 2});
    skew.set_boundary(1, Gf2Matrix::from_rows({{1, 1}, {0, 0}}));
    CHECK_THROWS_WITH_AS(quotient_by_action(skew, swap), doctest::Contains("commute"), std::invalid_argument);
}

TEST_CASE("rope ladder identities") {
    using rfh::mb::all_ones;
    using rfh::mb::rope_ladder_a;
    for (int m = 1; m <= 9; ++m) {
        const Gf2Matrix a = rope_ladder_a(m), one = all_ones(m);
        CHECK((a * one).is_zero());
        CHECK((one * a).is_zero());
        // I + cyclic shift has rank m - 1 (kernel spanned by the all-ones vector), except m = 1
        // where I + I = 0.
        CHECK(a.rank() == static_cast<std::size_t>(m - 1));
        for (int j = 0; j < m; ++j) {
            CHECK(a.get(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) == (m != 1));
            if (m > 1) CHECK(a.get(static_cast<std::size_t>((j + 1) % m), static_cast<std::size_t>(j)));
        }
    }
}

TEST_CASE("rope ladder complex and its quotients") {
    for (int n : {2, 3}) {
        for (int m = 1; m <= 6; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const rfh::mb::RfhSphereSpec spec{n, m, {}};
            const PeriodicComplexZ2 c = rfh::mb::rfh_sphere_complex(spec);
            verify_complex(assemble_window(c, -2 * n, 4 * n - 1));
            // Total dim of three periods exceeds the brute-force range; check one period of the
            // unlinked block instead when small enough.
            if (static_cast<std::size_t>(2 * n * m) <= 12) CHECK(homology_dims(c.block) == brute_force_homology(c.block));

            const PeriodicComplexZ2 q = quotient_by_action(c, rfh::mb::rfh_rotation_action(spec));
            const Gf2Matrix one = Gf2Matrix::from_rows({{1}}), zero(1, 1);
            for (int d = 0; d < 2 * n; ++d) CHECK(q.dim(d) == 1);
            for (int d = 1; d < 2 * n; ++d) CHECK(q.block.boundary(d) == ((d % 2 == 0 && m % 2 == 1) ? one : zero));
            CHECK(q.linking == (m % 2 ? one : zero));
            const GradedComplexZ2 w = assemble_window(q, -2 * n, 4 * n - 1);
            verify_complex(w);
            CHECK(homology_dims(w) == brute_force_homology(w));
        }
    }
}

TEST_CASE("lens homology table") {
    for (int n : {2, 3})
        for (int m = 1; m <= 6; ++m) {
            const DegreeDims h = rfh::mb::rfh_lens_homology({n, m, {}});
            CHECK(h.size() == static_cast<std::size_t>(2 * n));
            for (const auto& [k, v] : h) CHECK(v == (m % 2 == 0 ? 1u : 0u));
        }
    // Mixed exponents coprime to m give the same answer.
    for (const auto& [k, v] : rfh::mb::rfh_lens_homology({3, 4, {1, 3, 5}})) CHECK(v == 1u);
    CHECK_THROWS_AS(rfh::mb::rfh_lens_homology({2, 4, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(rfh::mb::rfh_lens_homology({1, 2, {}}), std::invalid_argument);
}

TEST_CASE("sphere complex: displaceable, and the even-linking control is not") {
    for (int m = 1; m <= 4; ++m) {
        for (const auto& [k, v] : rfh::mb::rfh_sphere_homology({2, m, {}})) CHECK(v == 0u);
        std::size_t total = 0;
        for (const auto& [k, v] : rfh::mb::rfh_sphere_homology({2, m, {}}, 0)) total += v;
        CHECK(total > 0);
    }
}

TEST_CASE("periodic window") {
    const PeriodicComplexZ2 c = rfh::mb::rfh_sphere_complex({2, 2, {}});
    CHECK_THROWS_AS(periodic_homology_dims(c, 0, 10), std::invalid_argument);
    const GradedComplexZ2 w = assemble_window(c, 0, 11);
    CHECK(w.labels(4).front() == "p1:C1:min0");
    CHECK(w.boundary(4) == c.linking);
}

TEST_CASE("json round trip") {
    std::mt19937 rng(3);
    const GradedComplexZ2 c = random_complex(rng, -1, {2, 3, 2});
    const GradedComplexZ2 back = complex_from_json(to_json(c));
    CHECK(to_json(back) == to_json(c));
    CHECK(homology_dims(back) == homology_dims(c));
    const PeriodicComplexZ2 p = rfh::mb::rfh_sphere_complex({2, 3, {}});
    CHECK(to_json(periodic_from_json(to_json(p))) == to_json(p));
    CHECK_THROWS(complex_from_json(nlohmann::json{{"degrees", 3}}));
}
