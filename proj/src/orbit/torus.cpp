#include "rfhkit/orbit/torus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfhkit/flow/closed_forms.hpp"

namespace rfh::orbit {

MagneticCheck magnetic_orbit_check(const Vec& q, const Vec& p, double tau, double c, const Mat& j,
                                   const std::optional<Mat>& twist, double tol) {
    const Eigen::Index n = j.rows();
    if (q.size() != n || p.size() != n) throw std::invalid_argument("dimension mismatch");
    const auto [e, integral] = flow::antisymmetric_exp_and_integral(j, tau);
    MagneticCheck out;
    if (twist) {
        const Mat& a = *twist;
        out.defects[0] = (q + integral * p - a * q).norm();
        out.defects[1] = (e * p - a * p).norm();
        out.defects[2] = std::abs(p.squaredNorm() - 2 * c);
    } else {
        // Range of J via its SVD; the kernel is the orthogonal complement.
        Eigen::JacobiSVD<Mat> svd(j, Eigen::ComputeFullU);
        Mat range_basis(n, 0);
        for (Eigen::Index i = 0; i < n; ++i)
            if (svd.singularValues()(i) > 1e-12) {
                range_basis.conservativeResize(n, range_basis.cols() + 1);
                range_basis.col(range_basis.cols() - 1) = svd.matrixU().col(i);
            }
        const Vec par = range_basis * (range_basis.transpose() * p);
        const Vec perp = p - par;
        out.defects[0] = perp.norm();
        out.defects[1] = (e * par - par).norm();
        out.defects[2] = std::abs(par.squaredNorm() - 2 * c);
    }
    out.ok = out.defects[0] <= tol && out.defects[1] <= tol && out.defects[2] <= tol;
    return out;
}

ForcingGap forcing_gap(double c, double tau_minus, double tau_plus) {
    if (!(c > 0)) throw std::invalid_argument("energy level c must be positive");
    ForcingGap g;
    g.gap = c * (tau_plus - tau_minus);
    g.e_sigma = 2 * std::numbers::pi * c;
    g.satisfied = g.gap <= g.e_sigma + 1e-12;
    return g;
}

Vec torus_family_point(double c, double t) {
    const double s = std::sqrt(2 * c);
    Vec v(4);
    v << s * std::sin(t), s * std::cos(t), s * std::cos(t), -s * std::sin(t);
    return v;
}

Mat torus_family_j() { return (Mat(2, 2) << 0, 1, -1, 0).finished(); }

Mat quarter_turn() { return (Mat(2, 2) << 0, 1, -1, 0).finished(); }

MagneticCheck torus_family_check(double c, double tau, double tol) {
    if (!(c > 0)) throw std::invalid_argument("energy level c must be positive");
    const Vec v = torus_family_point(c, 0.0);
    return magnetic_orbit_check(v.head(2), v.tail(2), tau, c, torus_family_j(), quarter_turn(), tol);
}

double omega_torus_family(double c, double tau, int samples) {
    if (samples % 2) ++samples;
    const double h = tau / samples;
    double sum = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double t = i * h;
        const Vec v = torus_family_point(c, t);
        // p' from the magnetic equation p' = J p with J = (0 1; -1 0)
        const double dp1 = v(3), dp2 = -v(2);
        const double integrand = -0.5 * (v(2) * dp2 - v(3) * dp1);
        const double w = (i == 0 || i == samples) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * integrand;
    }
    return sum * h / 3.0;
}

double displacement_energy(const Shape& s) {
    if (const auto* b = std::get_if<Ball>(&s)) {
        if (!(b->r > 0)) throw std::invalid_argument("ball radius must be positive");
        return std::numbers::pi * b->r * b->r;
    }
    const auto& t = std::get<MagneticTorusLevel>(s);
    if (!(t.c > 0)) throw std::invalid_argument("energy level must be positive");
    return 2 * std::numbers::pi * t.c;
}

Shape parse_shape(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("shape must look like ball:r or torus:c");
    const std::string kind = spec.substr(0, colon);
    const double v = std::stod(spec.substr(colon + 1));
    if (kind == "ball") return Ball{v};
    if (kind == "torus") return MagneticTorusLevel{v};
    throw std::invalid_argument("unsupported shape '" + kind + "'");
}

}  // namespace rfh::orbit
