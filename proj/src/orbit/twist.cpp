#include "rfhkit/orbit/twist.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfhkit/flow/closed_forms.hpp"

namespace rfh::orbit {

Vec TwistSpec::power(const Vec& x, int j) const {
    const int r = ((j % m) + m) % m;
    Vec y = x;
    for (int i = 0; i < r; ++i) y = map(y);
    return y;
}

TwistSpec rotation_twist(int m, const std::vector<int>& k) {
    if (m < 1) throw std::invalid_argument("twist order must be positive");
    if (k.empty()) throw std::invalid_argument("rotation needs one exponent per complex coordinate");
    const Eigen::Index n = static_cast<Eigen::Index>(k.size());
    // rotate_phases multiplies by e^{-i rate t}; rate = -2 pi k_j / m at t = 1 gives the twist.
    Vec rates(n);
    for (Eigen::Index j = 0; j < n; ++j) rates(j) = -2.0 * std::numbers::pi * k[static_cast<std::size_t>(j)] / m;
    Mat d = Mat::Zero(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double c = std::cos(rates(j)), s = std::sin(rates(j));
        d(j, j) = c;
        d(j, j + n) = s;
        d(j + n, j) = -s;
        d(j + n, j + n) = c;
    }
    TwistSpec t;
    t.name = "rotation";
    t.m = m;
    t.map = [d](const Vec& x) { return Vec(d * x); };
    t.derivative = [d](const Vec&) { return d; };
    return t;
}

TwistSpec lifted_isometry_twist(const Mat& a, int m) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || (a.transpose() * a - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("base map must be orthogonal");
    Mat d = Mat::Zero(2 * n, 2 * n);
    d.topLeftCorner(n, n) = a;
    d.bottomRightCorner(n, n) = a;  // A^{-T} = A for orthogonal A
    TwistSpec t;
    t.name = "lifted_isometry";
    t.m = m;
    t.map = [d](const Vec& x) { return Vec(d * x); };
    t.derivative = [d](const Vec&) { return d; };
    Mat p = Mat::Identity(n, n);
    for (int i = 0; i < m; ++i) p = a * p;
    if ((p - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("base map does not have order dividing m");
    return t;
}

double finite_order_defect(const TwistSpec& t, const std::vector<Vec>& points) {
    double worst = 0.0;
    for (const Vec& x : points) {
        Vec y = x;
        for (int i = 0; i < t.m; ++i) y = t.map(y);
        worst = std::max(worst, (y - x).norm());
    }
    return worst;
}

}  // namespace rfh::orbit
