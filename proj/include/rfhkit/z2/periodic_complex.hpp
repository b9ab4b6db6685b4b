#pragma once
// Z-graded complexes that repeat with a fixed degree shift.

#include "rfhkit/z2/graded_complex.hpp"

namespace rfh::z2 {

// One period is `block`, covering degrees [block.lo(), block.lo() + period_shift - 1].
// Copy j sits at degrees shifted by j * period_shift. The only boundary leaving a copy is
// `linking`, from the lowest degree of copy j+1 to the highest degree of copy j.
struct PeriodicComplexZ2 {
    int period_shift = 1;
    GradedComplexZ2 block;
    Gf2Matrix linking;

    std::size_t dim(int degree) const;
    Gf2Matrix boundary(int degree) const;
    std::string label(int degree, std::size_t i) const;
};

void validate_periodic(const PeriodicComplexZ2& c);

// Truncation of the Z-graded complex to [lo, hi].
GradedComplexZ2 assemble_window(const PeriodicComplexZ2& c, int lo, int hi);

// Homology of the window [lo, hi], reported for lo < k < hi only. The window must span at
// least three periods; boundaries are 2-term local so interior degrees are exact.
DegreeDims periodic_homology_dims(const PeriodicComplexZ2& c, int lo, int hi);

}  // namespace rfh::z2
