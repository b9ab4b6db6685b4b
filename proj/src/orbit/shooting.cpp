#include "rfhkit/orbit/shooting.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rfhkit/orbit/lift.hpp"

namespace rfh::orbit {

namespace {

struct System {
    const flow::HypersurfaceModel& sigma;
    const TwistSpec& twist;
    Vec x_seed, r_seed;

    Vec operator()(const Vec& u) const {
        const Eigen::Index d = u.size() - 1;
        const Vec x = u.head(d);
        const double tau = u(d);
        Vec f(d + 2);
        f.head(d) = sigma.reeb_flow(x, tau) - twist.map(x);
        f(d) = sigma.base.H(x);
        f(d + 1) = (x - x_seed).dot(r_seed);
        return f;
    }
};

// Radial retraction onto Sigma; keeps Newton away from the trivial solution x = 0.
bool retract(const flow::HypersurfaceModel& sigma, Vec& x) {
    try {
        x *= std::exp(-flow::collar_coordinate(sigma.sigma, x) / 2);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

Mat fd_jacobian(const System& sys, const Vec& u, double step) {
    const Vec f0 = sys(u);
    Mat jac(f0.size(), u.size());
    Vec up = u;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double h = step * std::max(1.0, std::abs(u(i)));
        up(i) = u(i) + h;
        const Vec fp = sys(up);
        up(i) = u(i) - h;
        const Vec fm = sys(up);
        up(i) = u(i);
        jac.col(i) = (fp - fm) / (2 * h);
    }
    return jac;
}

}  // namespace

TwistedOrbit shoot(const flow::HypersurfaceModel& sigma, const TwistSpec& twist, const Vec& x_seed, double tau_seed,
                   const ShootOptions& opt) {
    const Eigen::Index d = 2 * sigma.sigma.n;
    if (x_seed.size() != d) throw std::invalid_argument("seed has the wrong dimension");
    if (!std::isfinite(tau_seed)) throw std::invalid_argument("seed period must be finite");
    if (std::abs(sigma.base.H(x_seed)) >= 0.1) throw std::invalid_argument("seed is not near the hypersurface");

    System sys{sigma, twist, x_seed, sigma.reeb_field(x_seed)};
    Vec u(d + 1);
    u.head(d) = x_seed;
    u(d) = tau_seed;
    {
        Vec x = x_seed;
        if (retract(sigma, x)) u.head(d) = x;
    }

    TwistedOrbit out;
    Vec f = sys(u);
    double norm = f.norm();
    for (int it = 0; it <= opt.max_iter; ++it) {
        out.history.push_back(norm);
        if (norm < opt.tol) {
            out.iterations = it;
            out.x0 = u.head(d);
            out.tau = u(d);
            out.system_norm = norm;
            out.residual = f.head(d).norm();
            // Directions along which the solution is not isolated (Morse-Bott families).
            const Vec sv = Eigen::JacobiSVD<Mat>(fd_jacobian(sys, u, opt.fd_step)).singularValues();
            out.rank_deficiency = static_cast<int>((sv.array() < 1e-6 * std::max(1.0, sv(0))).count());
            return out;
        }
        if (it == opt.max_iter) break;
        const Mat jac = fd_jacobian(sys, u, opt.fd_step);
        Eigen::JacobiSVD<Mat> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Vec& s = svd.singularValues();
        Vec coeff = svd.matrixU().transpose() * f;
        for (Eigen::Index i = 0; i < s.size(); ++i) coeff(i) = s(i) < opt.sv_cutoff ? 0.0 : coeff(i) / s(i);
        const Vec step = -(svd.matrixV() * coeff);
        double lambda = 1.0;
        Vec trial_u, trial_f;
        double trial_norm = std::numeric_limits<double>::infinity();
        for (int bt = 0; bt < 30; ++bt) {
            trial_u = u + lambda * step;
            Vec x = trial_u.head(d);
            if (retract(sigma, x)) {
                trial_u.head(d) = x;
                trial_f = sys(trial_u);
                trial_norm = trial_f.norm();
                if (trial_norm < norm) break;
            }
            lambda *= 0.5;
        }
        if (!(trial_norm < norm)) break;  // stalled
        u = trial_u;
        f = trial_f;
        norm = trial_norm;
    }
    throw std::runtime_error("shooting did not converge: |F| = " + std::to_string(norm));
}

flow::Trajectory sample_orbit(const flow::HypersurfaceModel& sigma, const Vec& x0, double tau, int samples) {
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    flow::Trajectory tr;
    if (sigma.sigma.linear_reeb_rates || tau == 0) {
        for (int i = 0; i <= samples; ++i) {
            const double t = static_cast<double>(i) / samples;
            tr.times.push_back(t);
            tr.states.push_back(sigma.reeb_flow(x0, tau * t));
        }
        return tr;
    }
    // One RK4 pass with dt = tau / samples, reparametrized to unit time.
    tr = flow::flow(sigma.base, x0, tau, std::abs(tau) / samples);
    for (double& t : tr.times) t /= tau;
    return tr;
}

double action_value(const TwistedOrbit& orbit, const flow::HypersurfaceModel& sigma, int samples) {
    if (samples % 2) ++samples;
    const flow::Trajectory tr = sample_orbit(sigma, orbit.x0, orbit.tau, samples);
    const auto& g = tr.states;
    const int n = static_cast<int>(g.size()) - 1;
    if (n != samples) throw std::runtime_error("unexpected trajectory sampling");
    const double edge = sigma.h.delta / 2 - sigma.h.mu;
    for (const Vec& x : g)
        if (std::abs(sigma.base.H(x)) >= edge) throw std::runtime_error("trajectory leaves the collar");
    const double h = 1.0 / n;
    auto deriv = [&](int i) -> Vec {
        if (i >= 2 && i <= n - 2) return (g[i - 2] - 8.0 * g[i - 1] + 8.0 * g[i + 1] - g[i + 2]) / (12.0 * h);
        if (i < 2)  // fourth-order one-sided
            return (-25.0 * g[i] + 48.0 * g[i + 1] - 36.0 * g[i + 2] + 16.0 * g[i + 3] - 3.0 * g[i + 4]) / (12.0 * h);
        return (25.0 * g[i] - 48.0 * g[i - 1] + 36.0 * g[i - 2] - 16.0 * g[i - 3] + 3.0 * g[i - 4]) / (12.0 * h);
    };
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * flow::liouville_form(g[i], deriv(i));
    }
    return sum * h / 3.0;
}

std::vector<double> spectrum_sphere(int m, int k_lo, int k_hi) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    std::vector<double> out;
    for (int k = k_lo; k <= k_hi; ++k) out.push_back(std::numbers::pi / m * (m * k - 1));
    return out;
}

Monodromy monodromy_kernel(const TwistedOrbit& orbit, const flow::HypersurfaceModel& sigma, const TwistSpec& twist,
                           double kernel_tol, double fd_step) {
    const Vec& x0 = orbit.x0;
    const Eigen::Index d = x0.size();
    const auto map = [&](const Vec& x) { return sigma.reeb_flow(twist.map(x), -orbit.tau); };
    Monodromy out;
    out.full.resize(d, d);
    Vec xp = x0;
    for (Eigen::Index i = 0; i < d; ++i) {
        const double h = fd_step * std::max(1.0, std::abs(x0(i)));
        xp(i) = x0(i) + h;
        const Vec fp = map(xp);
        xp(i) = x0(i) - h;
        const Vec fm = map(xp);
        xp(i) = x0(i);
        out.full.col(i) = (fp - fm) / (2 * h);
    }
    if (!out.full.allFinite()) throw std::runtime_error("flow derivative failed");
    // Orthonormal basis of the tangent space: complement of grad H.
    const Vec normal = sigma.base.gradient(x0).normalized();
    Eigen::JacobiSVD<Mat> proj(Mat::Identity(d, d) - normal * normal.transpose(), Eigen::ComputeFullU);
    out.basis = proj.matrixU().leftCols(d - 1);
    out.tangent = out.basis.transpose() * out.full * out.basis;
    const double scale = Eigen::JacobiSVD<Mat>(out.tangent).singularValues()(0);
    const Mat defect = (out.tangent - Mat::Identity(d - 1, d - 1)) / (scale > 0 ? scale : 1.0);
    out.singular_values = Eigen::JacobiSVD<Mat>(defect).singularValues();
    for (Eigen::Index i = 0; i < out.singular_values.size(); ++i)
        if (out.singular_values(i) < kernel_tol) ++out.kernel_dim;
    out.reeb_defect = ((out.full - Mat::Identity(d, d)) * sigma.reeb_field(x0)).norm();
    return out;
}

symp::SymplecticPath linearized_path(const TwistedOrbit& orbit, const flow::HypersurfaceModel& sigma, int steps,
                                     double fd_step) {
    if (steps < 1) throw std::invalid_argument("steps must be positive");
    const int n = sigma.sigma.n;
    const Eigen::Index d = 2 * n;
    Mat c = Mat::Identity(d, d);
    c.bottomRightCorner(n, n) *= -1;
    symp::SymplecticPath path;
    path.n = n;
    for (int s = 0; s <= steps; ++s) {
        const double t = orbit.tau * s / steps;
        Mat jac(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
            Vec xp = orbit.x0, xm = orbit.x0;
            xp(i) += fd_step;
            xm(i) -= fd_step;
            jac.col(i) = (sigma.reeb_flow(xp, t) - sigma.reeb_flow(xm, t)) / (2 * fd_step);
        }
        path.samples.push_back(c * jac * c);
    }
    return path;
}

OrbitReport make_report(const TwistedOrbit& orbit, const flow::HypersurfaceModel& sigma, const TwistSpec& twist) {
    OrbitReport r;
    r.orbit = orbit;
    r.action = action_value(orbit, sigma);
    r.kernel_dim = monodromy_kernel(orbit, sigma, twist).kernel_dim;
    const flow::Trajectory tr = sample_orbit(sigma, orbit.x0, orbit.tau, 400);
    r.deck_index = lift_loop(tr.states, twist);
    if (twist.m == 1) {
        // The Reeb direction is always in the kernel, so the degenerate convention applies.
        symp::CzOptions opt;
        opt.degenerate = true;
        try {
            r.cz_index = symp::cz_index(linearized_path(orbit, sigma), opt);
        } catch (const std::exception&) {
            r.cz_index.reset();
        }
    }
    return r;
}

nlohmann::json to_json(const OrbitReport& r) {
    nlohmann::json j;
    j["x0"] = std::vector<double>(r.orbit.x0.data(), r.orbit.x0.data() + r.orbit.x0.size());
    j["tau"] = r.orbit.tau;
    j["residual"] = r.orbit.residual;
    j["action"] = r.action;
    j["kernel_dim"] = r.kernel_dim;
    j["deck_index"] = r.deck_index;
    if (r.cz_index) j["cz_index"] = *r.cz_index;
    return j;
}

}  // namespace rfh::orbit
