#include "rfhkit/flow/integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace rfh::flow {

Vec rk4_step(const std::function<Vec(const Vec&)>& f, const Vec& x, double h) {
    const Vec k1 = f(x);
    const Vec k2 = f(x + 0.5 * h * k1);
    const Vec k3 = f(x + 0.5 * h * k2);
    const Vec k4 = f(x + h * k3);
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory flow(const HamiltonianModel& m, const Vec& x0, double T, double dt, const FlowOptions& opt) {
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
    if (!std::isfinite(T)) throw std::invalid_argument("T must be finite");
    if (x0.size() != m.dim) throw std::invalid_argument("initial point has the wrong dimension");
    const auto field = [&m](const Vec& x) { return hamiltonian_vector_field(m, x); };
    Trajectory tr;
    tr.times.push_back(0.0);
    tr.states.push_back(x0);
    const double h0 = m.H ? m.H(x0) : 0.0;
    const double dir = T < 0 ? -1.0 : 1.0;
    const double span = std::abs(T);
    const long steps = static_cast<long>(std::ceil(span / dt - 1e-9));
    Vec x = x0;
    double t = 0.0;
    for (long i = 1; i <= steps; ++i) {
        const double t_next = (i == steps) ? T : dir * static_cast<double>(i) * dt;
        x = rk4_step(field, x, t_next - t);
        t = t_next;
        if (!x.allFinite() || x.norm() > opt.blowup)
            throw std::runtime_error("flow blew up at t = " + std::to_string(t));
        if (m.H) tr.energy_drift = std::max(tr.energy_drift, std::abs(m.H(x) - h0));
        if (i == steps || i % opt.store_every == 0) {
            tr.times.push_back(t);
            tr.states.push_back(x);
        }
    }
    return tr;
}

}  // namespace rfh::flow
