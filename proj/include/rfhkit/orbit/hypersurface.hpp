#pragma once
// Named built-in hypersurfaces: "sphere", "ellipsoid:a1,a2,...", "deformed:eps".
// "deformed" is the radial graph rho = 1 + eps * sum |u_j|^4 over unit vectors u, which is
// invariant under every diagonal rotation.

#include "rfhkit/flow/defining_hamiltonian.hpp"

namespace rfh::orbit {

flow::HypersurfaceModel make_hypersurface(const std::string& spec, int n, double delta = 1.0);

}  // namespace rfh::orbit
