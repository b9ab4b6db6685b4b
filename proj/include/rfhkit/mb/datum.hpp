#pragma once
// Morse-Bott data with cascades: critical components carrying an auxiliary Morse function.
// A point on component c with h-index i sits in degree offset(c) + i.

#include <json.hpp>
#include <string>
#include <vector>

#include "rfhkit/z2/graded_complex.hpp"

namespace rfh::mb {

struct Component {
    std::string label;
    double f = 0.0;
    int offset = 0;  // Morse index of f normal to the component
};

struct MorsePoint {
    std::size_t comp = 0;
    std::string label;
    int h_index = 0;
};

// Mod-2 count of cascades from point `from` down to point `to` (indices into points).
struct Cascade {
    std::size_t from = 0, to = 0;
    int parity = 1;
};

struct MorseBottDatum {
    std::vector<Component> components;
    std::vector<MorsePoint> points;
    std::vector<Cascade> cascades;

    int degree(std::size_t point) const;
    std::size_t find(const std::string& label) const;  // "comp:point" or a unique point label
    std::string full_label(std::size_t point) const;
};

// Generators are ordered by degree, then by their position in `points`. Throws
// std::invalid_argument for cascades that do not drop the degree by one or that climb in f,
// and for data whose boundary does not square to zero.
z2::GradedComplexZ2 build_complex(const MorseBottDatum& d);

// Height function on a teapot-shaped sphere: a ridge circle (normal index 1) with h-min and
// h-max, plus a top maximum, a saddle and two minima. Parities as in the displayed complex
// d_2 = (1 1; 0 0), d_1 = (0 1; 0 1).
MorseBottDatum teapot_datum();
// f = sum j |z_j|^2 on S^{2n-1}: n circles, circle j of normal index 2(j - 1).
MorseBottDatum sphere_datum(int n);
MorseBottDatum single_minimum_datum();

MorseBottDatum datum_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MorseBottDatum& d);

// | degree | dim | table for docs.
std::string markdown_table(const z2::DegreeDims& dims);

}  // namespace rfh::mb
