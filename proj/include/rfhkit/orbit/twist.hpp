#pragma once
// Finite-order symmetries phi used to twist the periodic-orbit condition.

#include <string>
#include <vector>

#include "rfhkit/flow/hamiltonian.hpp"

namespace rfh::orbit {

using flow::Mat;
using flow::Vec;

struct TwistSpec {
    std::string name;
    int m = 1;
    std::function<Vec(const Vec&)> map;
    std::function<Mat(const Vec&)> derivative;

    // phi^j for any integer j, reduced mod m.
    Vec power(const Vec& x, int j) const;
};

// z_j -> e^{2 pi i k_j / m} z_j on C^n (layout (x, y)).
TwistSpec rotation_twist(int m, const std::vector<int>& k);
// Cotangent lift (q, p) -> (A q, A p) of an orthogonal base map A with A^m = I.
TwistSpec lifted_isometry_twist(const Mat& a, int m);

// max |phi^m(x) - x| over the given points.
double finite_order_defect(const TwistSpec& t, const std::vector<Vec>& points);

}  // namespace rfh::orbit
