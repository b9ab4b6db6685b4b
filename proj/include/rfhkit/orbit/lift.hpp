#pragma once
// Lifting loops in Sigma / Z_m back to Sigma.

#include "rfhkit/orbit/twist.hpp"

namespace rfh::orbit {

// samples are arbitrary representatives of consecutive points of a loop in the quotient
// (the last sample lies over the first). The lift is continued by nearest preimage; the
// return value is the k in [0, m) with lift(end) = phi^k(lift(start)).
// Throws std::invalid_argument when consecutive points are too far apart to pick a preimage
// unambiguously, or when the samples do not close up in the quotient.
int lift_loop(const std::vector<Vec>& samples, const TwistSpec& twist, double close_tol = 1e-6);

}  // namespace rfh::orbit
