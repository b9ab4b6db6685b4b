#include "rfhkit/z2/action.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rfh::z2 {

std::vector<std::size_t> DegreeAction::perm(int degree, std::size_t dim) const {
    auto it = perms.find(degree);
    if (it == perms.end()) {
        std::vector<std::size_t> id(dim);
        std::iota(id.begin(), id.end(), std::size_t{0});
        return id;
    }
    if (it->second.size() != dim)
        throw std::invalid_argument("permutation in degree " + std::to_string(degree) + " has the wrong length");
    return it->second;
}

std::vector<std::vector<std::size_t>> free_orbits(const std::vector<std::size_t>& perm, int m) {
    if (m < 1) throw std::invalid_argument("group order must be positive");
    const std::size_t n = perm.size();
    std::vector<char> hit(n, 0);
    for (std::size_t v : perm) {
        if (v >= n || hit[v]) throw std::invalid_argument("action is not a bijection");
        hit[v] = 1;
    }
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit;
        std::size_t j = i;
        do {
            seen[j] = 1;
            orbit.push_back(j);
            j = perm[j];
        } while (j != i);
        if (orbit.size() != static_cast<std::size_t>(m))
            throw std::invalid_argument("action is not free: orbit of size " + std::to_string(orbit.size()) +
                                        " for Z_" + std::to_string(m));
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

namespace {

void require_commutes(const Gf2Matrix& d, const std::vector<std::size_t>& src_perm,
                      const std::vector<std::size_t>& dst_perm, int degree) {
    if (!(Gf2Matrix::permutation(dst_perm) * d == d * Gf2Matrix::permutation(src_perm)))
        throw std::invalid_argument("action does not commute with the boundary in degree " + std::to_string(degree));
}

// Entry (O_y, O_x) is the parity of the number of flow lines from the representative of O_x
// into the whole orbit O_y.
Gf2Matrix quotient_matrix(const Gf2Matrix& d, const std::vector<std::vector<std::size_t>>& src,
                          const std::vector<std::vector<std::size_t>>& dst) {
    Gf2Matrix q(dst.size(), src.size());
    for (std::size_t x = 0; x < src.size(); ++x) {
        const std::size_t rep = src[x].front();
        for (std::size_t y = 0; y < dst.size(); ++y) {
            bool parity = false;
            for (std::size_t t : dst[y]) parity ^= d.get(t, rep);
            q.set(y, x, parity);
        }
    }
    return q;
}

std::vector<std::string> orbit_labels(const std::vector<std::string>& names,
                                      const std::vector<std::vector<std::size_t>>& orbits) {
    std::vector<std::string> out;
    for (const auto& o : orbits) {
        const std::size_t rep = o.front();
        out.push_back("[" + (rep < names.size() ? names[rep] : "g" + std::to_string(rep)) + "]");
    }
    return out;
}

}  // namespace

GradedComplexZ2 quotient_by_action(const GradedComplexZ2& c, const DegreeAction& a) {
    verify_complex(c);
    if (c.empty()) return c;
    std::map<int, std::vector<std::size_t>> perms;
    std::map<int, std::vector<std::vector<std::size_t>>> orbits;
    std::vector<std::size_t> dims;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        perms[k] = a.perm(k, c.dim(k));
        orbits[k] = free_orbits(perms[k], a.m);
        dims.push_back(orbits[k].size());
    }
    GradedComplexZ2 q(c.lo(), dims);
    for (int k = c.lo(); k <= c.hi(); ++k) {
        q.set_labels(k, orbit_labels(c.labels(k), orbits[k]));
        if (k == c.lo()) continue;
        const Gf2Matrix d = c.boundary(k);
        require_commutes(d, perms[k], perms[k - 1], k);
        q.set_boundary(k, quotient_matrix(d, orbits[k], orbits[k - 1]));
    }
    return q;
}

PeriodicComplexZ2 quotient_by_action(const PeriodicComplexZ2& c, const DegreeAction& a) {
    validate_periodic(c);
    PeriodicComplexZ2 q;
    q.period_shift = c.period_shift;
    q.block = quotient_by_action(c.block, a);
    const int top = c.block.hi(), bottom = c.block.lo();
    const auto p_top = a.perm(top, c.block.dim(top));
    const auto p_bottom = a.perm(bottom, c.block.dim(bottom));
    require_commutes(c.linking, p_bottom, p_top, bottom + c.period_shift);
    q.linking = quotient_matrix(c.linking, free_orbits(p_bottom, a.m), free_orbits(p_top, a.m));
    return q;
}

}  // namespace rfh::z2
