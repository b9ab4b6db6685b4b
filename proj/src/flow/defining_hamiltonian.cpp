#include "rfhkit/flow/defining_hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rfhkit/flow/closed_forms.hpp"
#include "rfhkit/flow/integrator.hpp"

namespace rfh::flow {

namespace {

double smoothstep(double u) { return u * u * u * (10.0 + u * (-15.0 + 6.0 * u)); }
// Antiderivative of the smoothstep with value 0 at u = 0.
double smoothstep_integral(double u) { return u * u * u * u * (2.5 + u * (-3.0 + u)); }

}  // namespace

MollifiedH::MollifiedH(double delta_) : delta(delta_), mu(delta_ / 20.0) {
    if (!(delta_ > 0)) throw std::invalid_argument("mollifier width must be positive");
}

double MollifiedH::operator()(double r) const {
    if (r < 0) return -(*this)(-r);
    const double a = delta / 2 - mu, w = 2 * mu;
    if (r <= a) return r;
    if (r >= a + w) return delta / 2;
    const double u = (r - a) / w;
    return a + w * (u - smoothstep_integral(u));
}

double MollifiedH::derivative(double r) const {
    r = std::abs(r);
    const double a = delta / 2 - mu, w = 2 * mu;
    if (r <= a) return 1.0;
    if (r >= a + w) return 0.0;
    return 1.0 - smoothstep((r - a) / w);
}

StarShaped round_sphere(int n) {
    StarShaped s;
    s.name = "sphere";
    s.n = n;
    s.level = [](const Vec& w) { return w.squaredNorm() - 1.0; };
    s.level_grad = [](const Vec& w) { return Vec(2.0 * w); };
    s.linear_reeb_rates = Vec::Constant(n, 2.0);
    return s;
}

StarShaped ellipsoid(const Vec& a) {
    const Eigen::Index n = a.size();
    if (n < 1 || (a.array() <= 0).any()) throw std::invalid_argument("ellipsoid weights must be positive");
    StarShaped s;
    s.name = "ellipsoid";
    s.n = static_cast<int>(n);
    s.level = [a, n](const Vec& w) {
        double q = 0;
        for (Eigen::Index j = 0; j < n; ++j) q += a(j) * (w(j) * w(j) + w(j + n) * w(j + n));
        return q - 1.0;
    };
    s.level_grad = [a, n](const Vec& w) {
        Vec g(2 * n);
        for (Eigen::Index j = 0; j < n; ++j) {
            g(j) = 2 * a(j) * w(j);
            g(j + n) = 2 * a(j) * w(j + n);
        }
        return g;
    };
    s.linear_reeb_rates = Vec(2.0 * a);
    return s;
}

StarShaped radial_graph(int n, std::function<double(const Vec&)> rho, std::string name) {
    StarShaped s;
    s.name = std::move(name);
    s.n = n;
    s.level = [rho](const Vec& w) {
        const double r = w.norm();
        if (r == 0) return -rho(Vec::Unit(w.size(), 0));
        return r - rho(w / r);
    };
    return s;
}

double collar_coordinate(const StarShaped& s, const Vec& z) {
    if (z.size() != 2 * s.n) throw std::invalid_argument("point has the wrong dimension");
    const double rz = z.norm();
    if (rz == 0) return -std::numeric_limits<double>::infinity();
    const auto g = [&](double r) { return s.level(std::exp(-r / 2) * z); };
    // Start from the unit-sphere guess, then Newton with a central-difference slope.
    double r = 2.0 * std::log(rz);
    for (int it = 0; it < 50; ++it) {
        const double gr = g(r);
        const double hstep = 1e-6 * std::max(1.0, std::abs(r));
        const double slope = (g(r + hstep) - g(r - hstep)) / (2 * hstep);
        if (!(slope < 0)) throw std::invalid_argument("hypersurface " + s.name + " is not star-shaped along this ray");
        double step = gr / slope;
        if (std::abs(step) > 2.0) step = step > 0 ? 2.0 : -2.0;
        r -= step;
        if (std::abs(step) < 1e-12 * std::max(1.0, std::abs(r))) return r;
    }
    throw std::runtime_error("collar coordinate Newton did not converge");
}

Vec HypersurfaceModel::reeb_flow(const Vec& x, double t) const {
    if (sigma.linear_reeb_rates) return rotate_phases(x, *sigma.linear_reeb_rates, t);
    if (t == 0) return x;
    return flow(base, x, t, std::abs(t) / 2000.0, {1e8, 1 << 30}).end();
}

HypersurfaceModel build_defining_hamiltonian(const StarShaped& s, double delta) {
    HypersurfaceModel model{s, MollifiedH(delta), {}};
    const MollifiedH h = model.h;
    HamiltonianModel& m = model.base;
    m.name = "defining:" + s.name;
    m.dim = 2 * s.n;
    m.H = [s, h](const Vec& z) {
        if (z.norm() == 0) return -h.delta / 2;
        return h(collar_coordinate(s, z));
    };
    m.grad = [s, h](const Vec& z) {
        Vec g = Vec::Zero(z.size());
        if (z.norm() == 0) return g;
        const double r = collar_coordinate(s, z);
        const double hp = h.derivative(r);
        if (hp == 0) return g;
        // Implicit differentiation of level(e^{-r/2} z) = 0.
        const Vec w = std::exp(-r / 2) * z;
        const Vec gl = s.level_grad ? s.level_grad(w) : fd_gradient(s.level, w);
        const double radial = gl.dot(w);
        if (!(radial > 0)) throw std::invalid_argument("hypersurface " + s.name + " is not star-shaped");
        g = (hp * 2.0 * std::exp(-r / 2) / radial) * gl;
        return g;
    };
    return model;
}

}  // namespace rfh::flow
