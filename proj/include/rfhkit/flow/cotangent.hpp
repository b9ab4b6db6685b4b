#pragma once
// Cotangent lifts of base diffeomorphisms: (q, p) -> (phi(q), p o Dphi(q)^{-1}).
// Phase layout on T*R^n is (q, p); on T*C the base C is R^2 with q = (Re, Im).

#include <complex>

#include "rfhkit/flow/hamiltonian.hpp"

namespace rfh::flow {

using cplx = std::complex<double>;

struct BaseMap {
    int n = 1;
    std::function<Vec(const Vec&)> map;
    std::function<Mat(const Vec&)> jacobian;
};

// Throws std::invalid_argument when Dphi(q) is singular.
Vec cotangent_lift(const BaseMap& phi, const Vec& qp);

BaseMap identity_map(int n);
// Real form of a holomorphic map of C with derivative fp.
BaseMap holomorphic_map(std::function<cplx(cplx)> f, std::function<cplx(cplx)> fp);
// B(z) = (z + 1/z) / 2
BaseMap birkhoff_map();

// (z, w) -> (B(z), w / conj(B'(z))), the closed form of the lift.
std::pair<cplx, cplx> birkhoff_lift(cplx z, cplx w);

// lambda_{T*M}(v) = <p, dq(v)>
double canonical_one_form(const Vec& qp, const Vec& v);

// Planar restricted problem H(q, p) = |p|^2/2 + V(q) with V = V_+ + V_- + V_0 and
// V_+(q) = -mu_+ / |q - 1|, V_-(q) = -mu_- / |q + 1|.
struct RestrictedProblem {
    double mu_plus = 0.5;
    double mu_minus = 0.5;
    std::function<double(cplx)> v0 = [](cplx) { return 0.0; };
    double energy(cplx q, cplx p) const;
};

// (H(DB^dagger(z, w)) - c) |z^2 - 1|^2 / (4 |z|^4)
double birkhoff_composed(const RestrictedProblem& pr, double c, cplx z, cplx w);
// |w|^2/2 - mu_+ |z + 1|^2 / (2|z|^3) - mu_- |z - 1|^2 / (2|z|^3) + (V_0(B(z)) - c)|z^2 - 1|^2 / (4|z|^4)
double birkhoff_closed_form(const RestrictedProblem& pr, double c, cplx z, cplx w);

}  // namespace rfh::flow
