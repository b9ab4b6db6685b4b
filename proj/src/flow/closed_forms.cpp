#include "rfhkit/flow/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace rfh::flow {

Vec closed_flow_sphere(const Vec& z, double t, double tol) {
    if (std::abs(z.norm() - 1.0) > tol) throw std::invalid_argument("point is not on the unit sphere");
    return rotate_phases(z, Vec::Constant(z.size() / 2, 2.0), t);
}

Vec rotate_phases(const Vec& z, const Vec& rates, double t) {
    const Eigen::Index n = z.size() / 2;
    if (rates.size() != n) throw std::invalid_argument("one rate per complex coordinate");
    Vec out(z.size());
    for (Eigen::Index j = 0; j < n; ++j) {
        const double c = std::cos(rates(j) * t), s = std::sin(rates(j) * t);
        out(j) = c * z(j) + s * z(j + n);
        out(j + n) = -s * z(j) + c * z(j + n);
    }
    return out;
}

std::pair<Mat, Mat> antisymmetric_exp_and_integral(const Mat& j, double t) {
    const Eigen::Index n = j.rows();
    if (j.cols() != n || (j + j.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("J must be antisymmetric");
    Eigen::RealSchur<Mat> schur(j);
    const Mat& T = schur.matrixT();
    const Mat& Q = schur.matrixU();
    Mat e = Mat::Zero(n, n), integral = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < n;) {
        if (i + 1 < n && std::abs(T(i + 1, i)) > 1e-14) {
            const double b = T(i, i + 1);
            const double c = std::cos(b * t), s = std::sin(b * t);
            e.block(i, i, 2, 2) << c, s, -s, c;
            integral.block(i, i, 2, 2) << s / b, (1 - c) / b, -(1 - c) / b, s / b;
            i += 2;
        } else {
            e(i, i) = 1.0;
            integral(i, i) = t;
            i += 1;
        }
    }
    return {Q * e * Q.transpose(), Q * integral * Q.transpose()};
}

TorusState closed_flow_magnetic_torus(const Vec& q, const Vec& p, double t, const Mat& j, bool reduce) {
    if (q.size() != j.rows() || p.size() != j.rows()) throw std::invalid_argument("dimension mismatch");
    const auto [e, integral] = antisymmetric_exp_and_integral(j, t);
    TorusState out{q + integral * p, e * p};
    if (reduce)
        for (Eigen::Index i = 0; i < out.q.size(); ++i) out.q(i) -= std::floor(out.q(i));
    return out;
}

}  // namespace rfh::flow
