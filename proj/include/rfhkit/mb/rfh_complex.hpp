#pragma once
// Rabinowitz-Floer complexes of the round sphere twisted by a diagonal rotation.
//
// Each pearl k is a copy of the Z_m-invariant Morse-Bott complex of f = sum j |z_j|^2 on
// S^{2n-1}, with h(t) = cos(2 pi m t) on each critical circle, so every degree carries
// Z_2^m. Inside a circle the max -> min boundary is A = I + sum e_{(j+1)j} + e_{1m}; between
// circles and between pearls every min -> max count is odd, giving the all-ones matrix.

#include <string>

#include "rfhkit/mb/datum.hpp"
#include "rfhkit/z2/action.hpp"

namespace rfh::mb {

struct RfhSphereSpec {
    int n = 2;
    int m = 1;
    std::vector<int> k;  // rotation exponents, empty means all 1

    std::vector<int> exponents() const;
    void validate() const;
};

z2::Gf2Matrix rope_ladder_a(int m);
z2::Gf2Matrix all_ones(int m);

// linking_parity = 0 replaces the pearl-to-pearl count by an even one (negative control).
z2::PeriodicComplexZ2 rfh_sphere_complex(const RfhSphereSpec& spec, int linking_parity = 1);

// Rotation z_j -> e^{2 pi i k_j / m} z_j shifts the critical points of circle j by k_j steps.
z2::DegreeAction rfh_rotation_action(const RfhSphereSpec& spec);

// Interior homology of the quotient complex over a 3-period window, middle period only.
z2::DegreeDims rfh_lens_homology(const RfhSphereSpec& spec);
// Same window, no quotient.
z2::DegreeDims rfh_sphere_homology(const RfhSphereSpec& spec, int linking_parity = 1);

struct FixedPointSpec {
    std::vector<std::size_t> betti;  // Z_2 Betti numbers of Fix(phi|Sigma) by degree
};

struct FixedPointRfh {
    z2::DegreeDims dims;
    std::string note;
};

// Only constant orbits exist, so the only cascades are zero-cascade Morse flow lines on Fix.
FixedPointRfh fixed_point_rfh(const FixedPointSpec& spec);
// Betti numbers read off a Morse datum of Fix.
FixedPointSpec fixed_point_spec_from_datum(const MorseBottDatum& fix);

}  // namespace rfh::mb
