#pragma once
// Fixed-step RK4 for Hamiltonian flows; energy drift is monitored, not controlled.

#include <vector>

#include "rfhkit/flow/hamiltonian.hpp"

namespace rfh::flow {

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec> states;
    double energy_drift = 0.0;  // max |H(x(t)) - H(x(0))| over all steps, stored or not

    const Vec& end() const { return states.back(); }
};

struct FlowOptions {
    double blowup = 1e8;  // abort when |x| exceeds this
    int store_every = 1;  // keep every k-th step (the endpoint is always kept)
};

// Integrates to time T (T may be negative); the final step is shortened to land on T.
Trajectory flow(const HamiltonianModel& m, const Vec& x0, double T, double dt, const FlowOptions& opt = {});

// One RK4 step of an arbitrary autonomous field.
Vec rk4_step(const std::function<Vec(const Vec&)>& f, const Vec& x, double h);

}  // namespace rfh::flow
