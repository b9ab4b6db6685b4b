#include "rfhkit/flow/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rfh::flow {

Structure Structure::magnetic(const Mat& j) {
    if (j.rows() != j.cols() || (j + j.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("magnetic term must be an antisymmetric square matrix");
    Structure s;
    s.kind = Kind::Magnetic;
    s.sigma = [j](const Vec&) { return j; };
    return s;
}

Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x, double rel_step) {
    Vec g(x.size());
    Vec xp = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double h = rel_step * std::max(1.0, std::abs(x(i)));
        xp(i) = x(i) + h;
        const double fp = f(xp);
        xp(i) = x(i) - h;
        const double fm = f(xp);
        xp(i) = x(i);
        g(i) = (fp - fm) / (2 * h);
    }
    return g;
}

Vec HamiltonianModel::gradient(const Vec& x) const {
    if (x.size() != dim) throw std::invalid_argument("phase point has the wrong dimension for " + name);
    if (grad) return grad(x);
    if (!H) throw std::invalid_argument("model " + name + " has neither a Hamiltonian nor a gradient");
    return fd_gradient(H, x);
}

Vec hamiltonian_vector_field(const HamiltonianModel& m, const Vec& x) {
    const int n = m.n();
    const Vec g = m.gradient(x);
    Vec v(m.dim);
    v.head(n) = g.tail(n);
    v.tail(n) = -g.head(n);
    if (m.structure.kind == Structure::Kind::Magnetic) {
        const Mat s = m.structure.sigma(x.head(n));
        v.tail(n) += s * g.tail(n);
    }
    return v;
}

double liouville_form(const Vec& x, const Vec& v) {
    const Eigen::Index n = x.size() / 2;
    return 0.5 * (x.tail(n).dot(v.head(n)) - x.head(n).dot(v.tail(n)));
}

Vec liouville_vector_field(const Vec& x) { return 0.5 * x; }

HamiltonianModel sphere_model(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    HamiltonianModel m;
    m.name = "sphere";
    m.dim = 2 * n;
    m.H = [](const Vec& x) { return x.squaredNorm() - 1.0; };
    m.grad = [](const Vec& x) { return Vec(2.0 * x); };
    return m;
}

HamiltonianModel magnetic_torus_model(const Mat& j) {
    const int n = static_cast<int>(j.rows());
    HamiltonianModel m;
    m.name = "magnetic_torus";
    m.dim = 2 * n;
    m.H = [n](const Vec& x) { return 0.5 * x.tail(n).squaredNorm(); };
    m.grad = [n](const Vec& x) {
        Vec g = Vec::Zero(2 * n);
        g.tail(n) = x.tail(n);
        return g;
    };
    m.structure = Structure::magnetic(j);
    return m;
}

}  // namespace rfh::flow
