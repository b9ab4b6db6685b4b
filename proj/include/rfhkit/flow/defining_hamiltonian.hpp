#pragma once
// Defining Hamiltonians H = h(r) for star-shaped hypersurfaces in C^n, where r is the
// Liouville collar coordinate: the Liouville flow scales by e^{r/2}, so e^{-r/2} z lies on Sigma.

#include <optional>

#include "rfhkit/flow/hamiltonian.hpp"

namespace rfh::flow {

// Smoothed clamp of r to [-delta/2, delta/2]: identity on [-delta/2 + mu, delta/2 - mu],
// constant outside [-delta/2 - mu, delta/2 + mu], with h' = 1 - s(u) on the margins for the
// quintic smoothstep s. Since the average of 1 - s is 1/2, the plateau lands exactly on delta/2.
struct MollifiedH {
    double delta = 1.0;
    double mu = 0.05;

    explicit MollifiedH(double delta_);
    double operator()(double r) const;
    double derivative(double r) const;
};

// Sigma = {level = 0}, with level < 0 inside. level_grad may be empty (finite differences).
struct StarShaped {
    std::string name;
    int n = 1;
    std::function<double(const Vec&)> level;
    std::function<Vec(const Vec&)> level_grad;
    // Rates of the linear flow extending the Reeb flow, when one exists (sphere, ellipsoid).
    std::optional<Vec> linear_reeb_rates;
};

StarShaped round_sphere(int n);
// sum a_j |z_j|^2 = 1
StarShaped ellipsoid(const Vec& a);
// Sigma = {rho(z/|z|) z/|z|}; rho positive.
StarShaped radial_graph(int n, std::function<double(const Vec&)> rho, std::string name = "star_shaped");

// Newton on g(r) = level(e^{-r/2} z) = 0, tolerance 1e-12, at most 50 iterations.
// Throws if the ray through z is not transverse to Sigma or Newton fails.
double collar_coordinate(const StarShaped& s, const Vec& z);

struct HypersurfaceModel {
    StarShaped sigma;
    MollifiedH h;
    HamiltonianModel base;  // H = h(r), zero exactly on Sigma

    Vec reeb_field(const Vec& x) const { return hamiltonian_vector_field(base, x); }
    // Reeb flow of a point on Sigma: closed form when available, RK4 with dt = t/2000 otherwise.
    Vec reeb_flow(const Vec& x, double t) const;
};

HypersurfaceModel build_defining_hamiltonian(const StarShaped& s, double delta = 1.0);

}  // namespace rfh::flow
