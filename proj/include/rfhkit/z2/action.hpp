#pragma once
// Free Z_m actions on complexes and the induced quotient complexes.

#include <map>
#include <vector>

#include "rfhkit/z2/graded_complex.hpp"
#include "rfhkit/z2/periodic_complex.hpp"

namespace rfh::z2 {

// The generator of Z_m acts on degree k by sending basis vector i to perms[k][i].
// Degrees without an entry carry the identity permutation.
struct DegreeAction {
    int m = 1;
    std::map<int, std::vector<std::size_t>> perms;

    std::vector<std::size_t> perm(int degree, std::size_t dim) const;
};

// Orbits of the generator in one degree, each listed from its smallest element.
// Throws if the permutation is not a bijection or some orbit has size != m.
std::vector<std::vector<std::size_t>> free_orbits(const std::vector<std::size_t>& perm, int m);

// Throws std::invalid_argument for a non-free or non-commuting action.
GradedComplexZ2 quotient_by_action(const GradedComplexZ2& c, const DegreeAction& a);
// For periodic complexes the action is given on the block degrees and repeats in every copy.
PeriodicComplexZ2 quotient_by_action(const PeriodicComplexZ2& c, const DegreeAction& a);

}  // namespace rfh::z2
