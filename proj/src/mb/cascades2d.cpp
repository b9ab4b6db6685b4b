#include "rfhkit/mb/cascades2d.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace rfh::mb {

using V3 = Eigen::Vector3d;

const CriticalPoint2D& GradientModel2D::point(const std::string& label) const {
    for (const auto& c : critical)
        if (c.label == label) return c;
    throw std::invalid_argument("model " + name + " has no critical point '" + label + "'");
}

namespace {

struct Chart {
    V3 base, e1, e2;
};

Chart tangent_chart(const GradientModel2D& m, const V3& x) {
    if (!m.on_sphere) return {x, V3::UnitX(), V3::UnitY()};
    V3 e1 = (std::abs(x.x()) < 0.9 ? V3::UnitX() : V3::UnitY());
    e1 = (e1 - e1.dot(x) * x).normalized();
    return {x, e1, x.cross(e1)};
}

V3 chart_point(const GradientModel2D& m, const Chart& c, double u, double v) {
    V3 p = c.base + u * c.e1 + v * c.e2;
    return m.on_sphere ? V3(p.normalized()) : p;
}

V3 gradient(const GradientModel2D& m, const V3& x) {
    const double h = 1e-6;
    V3 g = V3::Zero();
    const int dims = m.on_sphere ? 3 : 2;
    for (int i = 0; i < dims; ++i) {
        V3 xp = x, xm = x;
        xp(i) += h;
        xm(i) -= h;
        g(i) = (m.f(xp) - m.f(xm)) / (2 * h);
    }
    if (m.on_sphere) g -= g.dot(x) * x;
    return g;
}

// Hessian of f in the chart at a critical point; eigenvectors returned as ambient vectors.
struct Linearization {
    Eigen::Vector2d values;
    V3 vec[2];
};

Linearization linearize(const GradientModel2D& m, const V3& x) {
    const Chart c = tangent_chart(m, x);
    const double h = 1e-4;
    auto f = [&](double u, double v) { return m.f(chart_point(m, c, u, v)); };
    Eigen::Matrix2d hess;
    hess(0, 0) = (f(h, 0) - 2 * f(0, 0) + f(-h, 0)) / (h * h);
    hess(1, 1) = (f(0, h) - 2 * f(0, 0) + f(0, -h)) / (h * h);
    hess(0, 1) = hess(1, 0) = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(hess);
    Linearization out;
    out.values = es.eigenvalues();
    for (int i = 0; i < 2; ++i) out.vec[i] = es.eigenvectors()(0, i) * c.e1 + es.eigenvectors()(1, i) * c.e2;
    return out;
}

struct Visit {
    int saddle;
    int branch;
    bool operator==(const Visit&) const = default;
};

struct Outcome {
    std::vector<Visit> visits;
    int arrival = -1;  // index into critical, -1 if stuck
    std::vector<double> closest;  // min distance to each critical point
    bool operator==(const Outcome& o) const { return visits == o.visits && arrival == o.arrival; }
};

class Tracer {
public:
    Tracer(const GradientModel2D& m, const CascadeOptions& opt) : m_(m), opt_(opt) {
        for (std::size_t i = 0; i < m.critical.size(); ++i) {
            const auto& c = m.critical[i];
            if (c.index == 1 && !c.at_infinity) unstable_[i] = linearize(m, c.x).vec[0];
        }
    }

    Outcome run(V3 x) const {
        Outcome out;
        out.closest.assign(m_.critical.size(), std::numeric_limits<double>::infinity());
        int inside = -1;
        const auto field = [&](const V3& p) { return V3(-gradient(m_, p)); };
        const long steps = static_cast<long>(opt_.t_max / opt_.dt);
        for (long s = 0; s < steps; ++s) {
            for (std::size_t i = 0; i < m_.critical.size(); ++i) {
                const auto& c = m_.critical[i];
                if (c.at_infinity) continue;
                const double d = (x - c.x).norm();
                out.closest[i] = std::min(out.closest[i], d);
                if (c.index == 0 && d < 1e-3) {
                    out.arrival = static_cast<int>(i);
                    return out;
                }
                if (c.index == 1) {
                    if (d < kBall && inside < 0) inside = static_cast<int>(i);
                    if (inside == static_cast<int>(i) && d > kBall) {
                        const V3& u = unstable_.at(i);
                        out.visits.push_back({inside, (x - c.x).dot(u) > 0 ? 1 : -1});
                        inside = -1;
                    }
                }
            }
            if (!m_.on_sphere && m_.escape_radius > 0 && x.norm() > m_.escape_radius) {
                for (std::size_t i = 0; i < m_.critical.size(); ++i)
                    if (m_.critical[i].at_infinity) out.arrival = static_cast<int>(i);
                return out;
            }
            // RK4 with a step capped in length so fast far-field motion stays resolved.
            const V3 k1 = field(x);
            double h = opt_.dt;
            if (k1.norm() * h > 0.05) h = 0.05 / k1.norm();
            const V3 k2 = field(x + 0.5 * h * k1);
            const V3 k3 = field(x + 0.5 * h * k2);
            const V3 k4 = field(x + h * k3);
            x += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
            if (m_.on_sphere) x.normalize();
        }
        return out;  // stuck near a critical point of positive index
    }

private:
    static constexpr double kBall = 0.05;
    const GradientModel2D& m_;
    const CascadeOptions& opt_;
    std::map<std::size_t, V3> unstable_;
};

}  // namespace

GradientModel2D round_sphere_height() {
    GradientModel2D m;
    m.name = "round_sphere";
    m.on_sphere = true;
    m.f = [](const V3& x) { return x.z(); };
    m.critical = {{"north", V3(0, 0, 1), 2, false}, {"south", V3(0, 0, -1), 0, false}};
    return m;
}

GradientModel2D teapot_profile() {
    GradientModel2D m;
    m.name = "teapot";
    m.escape_radius = 6.0;
    m.f = [](const V3& p) {
        const double x = p.x(), y = p.y(), rho = x * x + y * y;
        const double ridge = std::exp(-(rho - 1) * (rho - 1) / 0.36) * (1 + 0.3 * x);
        const double top = 1.2 * std::exp(-((x - 2.6) * (x - 2.6) + y * y) / 0.25);
        return ridge + top - 0.02 * rho;
    };
    // Approximate locations, refined by Newton below.
    m.critical = {{"top:max", V3(2.59, 0, 0), 2, false},     {"ridge:max", V3(1.009, 0, 0), 2, false},
                  {"saddle:pt", V3(1.576, 0, 0), 1, false},  {"ridge:min", V3(-0.978, 0, 0), 1, false},
                  {"outer:min", V3::Zero(), 0, true},       {"inner:min", V3(-0.029, 0, 0), 0, false}};
    for (auto& c : m.critical) {
        if (c.at_infinity) continue;
        for (int it = 0; it < 50; ++it) {
            const V3 g = gradient(m, c.x);
            if (g.norm() < 1e-12) break;
            const Linearization lin = linearize(m, c.x);
            V3 step = V3::Zero();
            for (int i = 0; i < 2; ++i) step -= lin.vec[i] * (lin.vec[i].dot(g) / lin.values(i));
            c.x += step;
        }
    }
    return m;
}

int count_cascades_2d(const GradientModel2D& model, const std::string& source, const std::string& target,
                      const CascadeOptions& opt) {
    if (source == target) return 0;
    const CriticalPoint2D& src = model.point(source);
    const CriticalPoint2D& dst = model.point(target);
    if (src.index - dst.index != 1 || src.at_infinity) return 0;
    int target_id = -1;
    for (std::size_t i = 0; i < model.critical.size(); ++i)
        if (model.critical[i].label == target) target_id = static_cast<int>(i);

    const Tracer tracer(model, opt);
    const Linearization lin = linearize(model, src.x);
    const double eps = 1e-3;

    if (src.index == 1) {
        int count = 0;
        for (int sgn : {1, -1}) {
            V3 start = src.x + sgn * eps * lin.vec[0];
            if (model.on_sphere) start.normalize();
            const Outcome o = tracer.run(start);
            if (o.arrival < 0) throw std::runtime_error("unstable branch did not reach a minimum");
            if (o.arrival == target_id) ++count;
        }
        return count % 2;
    }

    // Index 2: both Hessian directions are unstable. Samples sit at half-cell offsets so a
    // symmetry axis of the model never lands exactly on a sample.
    const auto start = [&](double theta) {
        V3 p = src.x + eps * (std::cos(theta) * lin.vec[0] + std::sin(theta) * lin.vec[1]);
        if (model.on_sphere) p.normalize();
        return p;
    };
    const int dirs = opt.directions;
    std::vector<Outcome> keys;
    for (int i = 0; i < dirs; ++i) {
        keys.push_back(tracer.run(start(2 * std::numbers::pi * (i + 0.5) / dirs)));
        if (keys.back().arrival < 0) throw std::runtime_error("sample trajectory did not reach a minimum");
    }
    int count = 0;
    for (int i = 0; i < dirs; ++i) {
        const Outcome& a = keys[static_cast<std::size_t>(i)];
        const Outcome& b = keys[static_cast<std::size_t>((i + 1) % dirs)];
        if (a == b) continue;
        double lo = 2 * std::numbers::pi * (i + 0.5) / dirs, hi = 2 * std::numbers::pi * (i + 1.5) / dirs;
        // A trajectory that never reaches a minimum has stalled on a saddle: it is the edge.
        Outcome edge;
        bool stalled = false;
        for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            Outcome o = tracer.run(start(mid));
            if (o.arrival < 0) {
                edge = std::move(o);
                stalled = true;
                break;
            }
            if (o == a)
                lo = mid;
            else if (o == b)
                hi = mid;
            else
                throw std::runtime_error("clustering ambiguous: three outcomes within one direction cell");
        }
        // The limiting trajectory runs into the saddle whose stable manifold it lies on; a
        // key change without such a saddle is a ball-entry artifact.
        if (!stalled) edge = tracer.run(start(lo));
        int hit = -1;
        double best = 1e-3;
        for (std::size_t s = 0; s < model.critical.size(); ++s) {
            if (model.critical[s].index != 1 || model.critical[s].at_infinity) continue;
            if (edge.closest[s] < best) {
                best = edge.closest[s];
                hit = static_cast<int>(s);
            }
        }
        if (hit == target_id) ++count;
    }
    return count % 2;
}

}  // namespace rfh::mb
