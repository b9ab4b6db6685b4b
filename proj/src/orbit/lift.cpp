#include "rfhkit/orbit/lift.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace rfh::orbit {

namespace {

// Smallest distance from x to a nontrivial translate of itself.
double separation(const Vec& x, const TwistSpec& t) {
    double best = std::numeric_limits<double>::infinity();
    Vec y = x;
    for (int j = 1; j < t.m; ++j) {
        y = t.map(y);
        best = std::min(best, (y - x).norm());
    }
    return best;
}

}  // namespace

int lift_loop(const std::vector<Vec>& samples, const TwistSpec& twist, double close_tol) {
    if (samples.empty()) throw std::invalid_argument("empty loop");
    if (twist.m == 1) return 0;
    Vec lifted = samples.front();
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double sep = separation(lifted, twist);
        Vec best;
        double best_d = std::numeric_limits<double>::infinity();
        Vec y = samples[i];
        for (int j = 0; j < twist.m; ++j) {
            const double dist = (y - lifted).norm();
            if (dist < best_d) {
                best_d = dist;
                best = y;
            }
            y = twist.map(y);
        }
        if (!(best_d < sep / 2))
            throw std::invalid_argument("sampling too coarse at sample " + std::to_string(i) +
                                        ": nearest preimage is ambiguous");
        lifted = best;
    }
    Vec y = samples.front();
    const double scale = std::max(1.0, y.norm());
    for (int k = 0; k < twist.m; ++k) {
        if ((y - lifted).norm() < close_tol * scale) return k;
        y = twist.map(y);
    }
    throw std::invalid_argument("samples do not form a loop in the quotient");
}

}  // namespace rfh::orbit
