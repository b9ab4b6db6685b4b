#pragma once
// Exact flows for the built-in models.

#include <utility>

#include "rfhkit/flow/hamiltonian.hpp"

namespace rfh::flow {

// e^{-2it} z on the unit sphere; throws if |z| differs from 1 by more than tol.
Vec closed_flow_sphere(const Vec& z, double t, double tol = 1e-9);

// z_j -> e^{-i rates_j t} z_j, no sphere check. With rates_j = 2 a_j this is the flow of
// sum a_j |z_j|^2, the Reeb flow of the ellipsoid sum a_j |z_j|^2 = 1.
Vec rotate_phases(const Vec& z, const Vec& rates, double t);

struct TorusState {
    Vec q, p;
};

// q' = q + int_0^t e^{sJ} p ds, p' = e^{tJ} p, computed blockwise from the real Schur form of J.
// With reduce the base point is taken mod 1 in each coordinate.
TorusState closed_flow_magnetic_torus(const Vec& q, const Vec& p, double t, const Mat& j, bool reduce = true);

// e^{tJ} and int_0^t e^{sJ} ds for antisymmetric J.
std::pair<Mat, Mat> antisymmetric_exp_and_integral(const Mat& j, double t);

}  // namespace rfh::flow
