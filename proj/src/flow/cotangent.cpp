#include "rfhkit/flow/cotangent.hpp"

#include <cmath>
#include <stdexcept>

namespace rfh::flow {

Vec cotangent_lift(const BaseMap& phi, const Vec& qp) {
    const int n = phi.n;
    if (qp.size() != 2 * n) throw std::invalid_argument("phase point has the wrong dimension");
    const Vec q = qp.head(n), p = qp.tail(n);
    const Mat d = phi.jacobian(q);
    Eigen::FullPivLU<Mat> lu(d);
    if (!lu.isInvertible() || std::abs(d.determinant()) < 1e-14)
        throw std::invalid_argument("base map has a singular Jacobian");
    Vec out(2 * n);
    out.head(n) = phi.map(q);
    // p' = p o Dphi^{-1}, i.e. Dphi^{-T} p as a column
    out.tail(n) = lu.solve(Mat::Identity(n, n)).transpose() * p;
    return out;
}

BaseMap identity_map(int n) {
    return {n, [](const Vec& q) { return q; }, [n](const Vec&) { return Mat(Mat::Identity(n, n)); }};
}

BaseMap holomorphic_map(std::function<cplx(cplx)> f, std::function<cplx(cplx)> fp) {
    BaseMap b;
    b.n = 2;
    b.map = [f](const Vec& q) {
        const cplx v = f({q(0), q(1)});
        return Vec((Vec(2) << v.real(), v.imag()).finished());
    };
    b.jacobian = [fp](const Vec& q) {
        const cplx d = fp({q(0), q(1)});
        Mat m(2, 2);
        m << d.real(), -d.imag(), d.imag(), d.real();
        return m;
    };
    return b;
}

BaseMap birkhoff_map() {
    return holomorphic_map([](cplx z) { return 0.5 * (z + 1.0 / z); }, [](cplx z) { return 0.5 * (1.0 - 1.0 / (z * z)); });
}

std::pair<cplx, cplx> birkhoff_lift(cplx z, cplx w) {
    const cplx bp = 0.5 * (1.0 - 1.0 / (z * z));
    if (std::abs(bp) < 1e-14) throw std::invalid_argument("Birkhoff map is critical at z = +-1");
    return {0.5 * (z + 1.0 / z), w / std::conj(bp)};
}

double canonical_one_form(const Vec& qp, const Vec& v) {
    const Eigen::Index n = qp.size() / 2;
    return qp.tail(n).dot(v.head(n));
}

double RestrictedProblem::energy(cplx q, cplx p) const {
    return 0.5 * std::norm(p) - mu_plus / std::abs(q - 1.0) - mu_minus / std::abs(q + 1.0) + v0(q);
}

double birkhoff_composed(const RestrictedProblem& pr, double c, cplx z, cplx w) {
    const auto [q, p] = birkhoff_lift(z, w);
    return (pr.energy(q, p) - c) * std::norm(z * z - 1.0) / (4.0 * std::pow(std::abs(z), 4));
}

double birkhoff_closed_form(const RestrictedProblem& pr, double c, cplx z, cplx w) {
    const double az = std::abs(z);
    const double az3 = az * az * az;
    return 0.5 * std::norm(w) - pr.mu_plus * std::norm(z + 1.0) / (2 * az3) -
           pr.mu_minus * std::norm(z - 1.0) / (2 * az3) +
           (pr.v0(0.5 * (z + 1.0 / z)) - c) * std::norm(z * z - 1.0) / (4.0 * az * az3);
}

}  // namespace rfh::flow
