#pragma once
// Twisted closed Reeb orbits: phi^R_tau(x0) = phi(x0) with x0 on Sigma.

#include <json.hpp>
#include <optional>

#include "rfhkit/flow/defining_hamiltonian.hpp"
#include "rfhkit/flow/integrator.hpp"
#include "rfhkit/orbit/twist.hpp"
#include "rfhkit/symp/cz_index.hpp"

namespace rfh::orbit {

struct ShootOptions {
    double tol = 1e-9;
    int max_iter = 50;
    double fd_step = 1e-6;
    double sv_cutoff = 1e-10;  // singular values below this are dropped from the pseudo-inverse
};

struct TwistedOrbit {
    Vec x0;
    double tau = 0.0;
    double residual = 0.0;  // |phi^R_tau(x0) - phi(x0)|
    double system_norm = 0.0;  // |F| including the level and phase rows
    int iterations = 0;
    std::vector<double> history;  // |F| before each Newton step and at exit
    int rank_deficiency = 0;  // near-zero singular values of the Jacobian at the solution
};

// Newton on F(x, tau) = (phi^R_tau(x) - phi(x), H(x), <x - x_seed, R(x_seed)>), minimum-norm
// steps through a truncated SVD, radial retraction onto Sigma and backtracking on |F|. Throws std::runtime_error when it
// does not reach tol within max_iter.
TwistedOrbit shoot(const flow::HypersurfaceModel& sigma, const TwistSpec& twist, const Vec& x_seed, double tau_seed,
                   const ShootOptions& opt = {});

// gamma(t) = phi^R_{tau t}(x0) at t = i / samples.
flow::Trajectory sample_orbit(const flow::HypersurfaceModel& sigma, const Vec& x0, double tau, int samples = 2000);

// int_0^1 lambda(gamma') dt with gamma' from fourth-order differences of the samples and
// Simpson's rule. Throws if the trajectory leaves the collar.
double action_value(const TwistedOrbit& orbit, const flow::HypersurfaceModel& sigma, int samples = 2000);

// tau_k = (pi / m)(m k - 1) for k in [k_lo, k_hi].
std::vector<double> spectrum_sphere(int m, int k_lo, int k_hi);

struct Monodromy {
    int kernel_dim = 0;
    Mat full;            // D(phi^R_{-tau} o phi) at x0 on R^{2n}
    Mat tangent;         // restriction to T Sigma, in the orthonormal basis `basis`
    Mat basis;           // 2n x (2n - 1)
    Vec singular_values; // of (tangent - I) / |tangent|
    double reeb_defect = 0.0;  // |(M - I) R(x0)|
};

Monodromy monodromy_kernel(const TwistedOrbit& orbit, const flow::HypersurfaceModel& sigma, const TwistSpec& twist,
                           double kernel_tol = 1e-6, double fd_step = 1e-6);

// t -> C D(phi^R_{tau t})(x0) C for t in [0, 1], by central differences. C = diag(I, -I) takes
// the (q, p) frame with omega = dy ^ dx to the standard one.
symp::SymplecticPath linearized_path(const TwistedOrbit& orbit, const flow::HypersurfaceModel& sigma, int steps = 200,
                                     double fd_step = 1e-5);

struct OrbitReport {
    TwistedOrbit orbit;
    double action = 0.0;
    int kernel_dim = 0;
    std::optional<int> cz_index;
    int deck_index = 0;
};

OrbitReport make_report(const TwistedOrbit& orbit, const flow::HypersurfaceModel& sigma, const TwistSpec& twist);
nlohmann::json to_json(const OrbitReport& r);

}  // namespace rfh::orbit
