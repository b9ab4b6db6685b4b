#pragma once
// Conley-Zehnder and Maslov indices of sampled paths in Sp(2n).

#include <functional>
#include <json.hpp>

#include "rfhkit/symp/symplectic.hpp"

namespace rfh::symp {

// Samples at uniform times on [0, 1].
struct SymplecticPath {
    int n = 1;
    std::vector<Mat> samples;

    static SymplecticPath sample(int n, const std::function<Mat(double)>& f, int steps);
};

// Distance between the unitary images (graph and polar) of two samples. Consecutive samples
// must stay below CzOptions::step_bound.
double path_step(const Mat& a, const Mat& b);

struct CzOptions {
    bool degenerate = false;  // allow Psi(1) to have eigenvalue 1
    double tol_symp = kTolSymp;
    double step_bound = kStepBound;
    double epsilon = 1e-3;  // perturbation size for degenerate endpoints
};

// Rotation-number method on the graph of the path: the unitary Souriau image of Gr(Psi)
// relative to the diagonal is tracked through arg det, and the endpoint eigenvalue angles
// give the correction. Degenerate endpoints use Psi(t) exp(-eps J0 t), eps -> 0+, checked
// at eps and eps/2.
int cz_index(const SymplecticPath& p, const CzOptions& opt = {});

// Spectral-flow count for a path whose endpoints are both nondegenerate; the start need not
// be the identity. cz_index(p ++ q) = cz_index(p) + cz_segment_index(q).
int cz_segment_index(const SymplecticPath& p, const CzOptions& opt = {});

// Winding number of det_C of the unitary polar factor along a loop.
int maslov_loop_index(const SymplecticPath& loop, const CzOptions& opt = {});

// cz(p1) - cz(p0); the absolute value of either is anchored by the identity start.
int relative_cz(const SymplecticPath& p0, const SymplecticPath& p1, const CzOptions& opt = {});

// q must start where p ends; the result is reparametrized to [0, 1].
SymplecticPath concatenate(const SymplecticPath& p, const SymplecticPath& q);
// Pointwise product eta(t) * Psi(t); sample counts must agree.
SymplecticPath multiply(const SymplecticPath& eta, const SymplecticPath& psi);
SymplecticPath conjugate(const SymplecticPath& p, const Mat& a);

// JSON: array of row-major matrices, each a flat array of (2n)^2 numbers or an array of rows.
SymplecticPath path_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SymplecticPath& p);

}  // namespace rfh::symp
