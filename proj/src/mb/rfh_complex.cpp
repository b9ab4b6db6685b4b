#include "rfhkit/mb/rfh_complex.hpp"

#include <numeric>
#include <stdexcept>

namespace rfh::mb {

std::vector<int> RfhSphereSpec::exponents() const { return k.empty() ? std::vector<int>(static_cast<std::size_t>(n), 1) : k; }

void RfhSphereSpec::validate() const {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (m < 1) throw std::invalid_argument("m must be positive");
    const auto ks = exponents();
    if (static_cast<int>(ks.size()) != n) throw std::invalid_argument("need one rotation exponent per coordinate");
    for (int kj : ks)
        if (std::gcd(kj, m) != 1) throw std::invalid_argument("rotation exponents must be coprime to m");
}

z2::Gf2Matrix rope_ladder_a(int m) {
    z2::Gf2Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        a.flip(static_cast<std::size_t>(j), static_cast<std::size_t>(j));
        a.flip(static_cast<std::size_t>((j + 1) % m), static_cast<std::size_t>(j));
    }
    return a;
}

z2::Gf2Matrix all_ones(int m) { return z2::Gf2Matrix::ones(static_cast<std::size_t>(m), static_cast<std::size_t>(m)); }

z2::PeriodicComplexZ2 rfh_sphere_complex(const RfhSphereSpec& spec, int linking_parity) {
    spec.validate();
    const int n = spec.n, m = spec.m;
    const auto um = static_cast<std::size_t>(m);
    z2::PeriodicComplexZ2 c;
    c.period_shift = 2 * n;
    c.block = z2::GradedComplexZ2(0, std::vector<std::size_t>(static_cast<std::size_t>(2 * n), um));
    for (int j = 1; j <= n; ++j) {
        const int dmin = 2 * (j - 1), dmax = dmin + 1;
        std::vector<std::string> mins, maxs;
        for (int i = 0; i < m; ++i) {
            mins.push_back("C" + std::to_string(j) + ":min" + std::to_string(i));
            maxs.push_back("C" + std::to_string(j) + ":max" + std::to_string(i));
        }
        c.block.set_labels(dmin, mins);
        c.block.set_labels(dmax, maxs);
        c.block.set_boundary(dmax, rope_ladder_a(m));
        if (j > 1) c.block.set_boundary(dmin, all_ones(m));
    }
    c.linking = (linking_parity & 1) ? all_ones(m) : z2::Gf2Matrix(um, um);
    z2::validate_periodic(c);
    return c;
}

z2::DegreeAction rfh_rotation_action(const RfhSphereSpec& spec) {
    spec.validate();
    const auto ks = spec.exponents();
    z2::DegreeAction a;
    a.m = spec.m;
    for (int j = 1; j <= spec.n; ++j) {
        std::vector<std::size_t> perm(static_cast<std::size_t>(spec.m));
        const int shift = ((ks[static_cast<std::size_t>(j - 1)] % spec.m) + spec.m) % spec.m;
        for (int i = 0; i < spec.m; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::size_t>((i + shift) % spec.m);
        a.perms[2 * (j - 1)] = perm;
        a.perms[2 * (j - 1) + 1] = perm;
    }
    return a;
}

namespace {

z2::DegreeDims middle_period(const z2::PeriodicComplexZ2& c) {
    const int p = c.period_shift;
    z2::DegreeDims all = z2::periodic_homology_dims(c, -p, 2 * p - 1);
    z2::DegreeDims out;
    for (int d = 0; d < p; ++d) out[d] = all.at(d);
    return out;
}

}  // namespace

z2::DegreeDims rfh_lens_homology(const RfhSphereSpec& spec) {
    return middle_period(z2::quotient_by_action(rfh_sphere_complex(spec), rfh_rotation_action(spec)));
}

z2::DegreeDims rfh_sphere_homology(const RfhSphereSpec& spec, int linking_parity) {
    return middle_period(rfh_sphere_complex(spec, linking_parity));
}

FixedPointRfh fixed_point_rfh(const FixedPointSpec& spec) {
    FixedPointRfh out;
    for (std::size_t k = 0; k < spec.betti.size(); ++k) out.dims[static_cast<int>(k)] = spec.betti[k];
    out.note =
        "all critical points are constant (tau = 0); a cascade with a nontrivial Floer "
        "piece would need tau+ < tau-, so the boundary is the Morse boundary on Fix and "
        "RFH equals H(Fix; Z2)";
    return out;
}

FixedPointSpec fixed_point_spec_from_datum(const MorseBottDatum& fix) {
    FixedPointSpec spec;
    if (fix.points.empty()) return spec;
    const auto dims = z2::homology_dims(build_complex(fix));
    if (dims.begin()->first < 0) throw std::invalid_argument("negative degree in a fixed point datum");
    spec.betti.assign(static_cast<std::size_t>(dims.rbegin()->first + 1), 0);
    for (const auto& [k, v] : dims) spec.betti[static_cast<std::size_t>(k)] = v;
    return spec;
}

}  // namespace rfh::mb
