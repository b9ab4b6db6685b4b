#pragma once
// Magnetic flow on T*T^n: closed-orbit conditions, the forcing gap and displacement energies.

#include <optional>
#include <string>
#include <variant>

#include "rfhkit/flow/hamiltonian.hpp"

namespace rfh::orbit {

using flow::Mat;
using flow::Vec;

struct MagneticCheck {
    bool ok = false;
    // Untwisted: |pr_perp p|, |e^{tau J} pr_par p - pr_par p|, ||pr_par p|^2 - 2c|.
    // Twisted:   |q + int_0^tau e^{sJ} p ds - A q|, |e^{tau J} p - A p|, ||p|^2 - 2c|.
    double defects[3] = {0, 0, 0};
};

// pr_par is the orthogonal projection onto the range of J, pr_perp onto its kernel. The
// twisted variant takes the orthogonal base map A of phi(q) = A q and checks in the
// universal cover, i.e. for contractible orbits.
MagneticCheck magnetic_orbit_check(const Vec& q, const Vec& p, double tau, double c, const Mat& j,
                                   const std::optional<Mat>& twist = std::nullopt, double tol = 1e-8);

struct ForcingGap {
    double gap = 0.0;
    double e_sigma = 0.0;
    bool satisfied = false;
};

// gap = c (tau_plus - tau_minus), e = 2 pi c. Throws for c <= 0.
ForcingGap forcing_gap(double c, double tau_minus, double tau_plus);

// Omega(v) for v(t) = sqrt(2c)(sin t, cos t, cos t, -sin t), by quadrature of the
// stabilizing form -1/2 (p_1 dp_2 - p_2 dp_1) over [0, tau].
double omega_torus_family(double c, double tau, int samples = 4000);
Vec torus_family_point(double c, double t);

// Magnetic T*T^2 with sigma = dq1 ^ dq2: J = (0 1; -1 0), so p(t) = exp(tJ) p(0).
Mat torus_family_j();
// phi(q1, q2) = (q2, -q1), the twist of the explicit family.
Mat quarter_turn();
// The family v(t) = sqrt(2c)(sin t, cos t, cos t, -sin t) as (q, p) checked against the twisted
// orbit equations at period tau; it closes for tau in 2 pi Z + pi/2.
MagneticCheck torus_family_check(double c, double tau, double tol = 1e-8);

struct Ball {
    double r;
};
struct MagneticTorusLevel {
    double c;
};
using Shape = std::variant<Ball, MagneticTorusLevel>;

double displacement_energy(const Shape& s);
// "ball:r" or "torus:c"
Shape parse_shape(const std::string& spec);

}  // namespace rfh::orbit
