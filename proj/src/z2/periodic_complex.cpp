#include "rfhkit/z2/periodic_complex.hpp"

#include <stdexcept>

namespace rfh::z2 {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::size_t PeriodicComplexZ2::dim(int degree) const {
    const int r = degree - block.lo() - floor_div(degree - block.lo(), period_shift) * period_shift;
    return block.dim(block.lo() + r);
}

Gf2Matrix PeriodicComplexZ2::boundary(int degree) const {
    const int r = degree - block.lo() - floor_div(degree - block.lo(), period_shift) * period_shift;
    if (r == 0) return linking;
    return block.boundary(block.lo() + r);
}

std::string PeriodicComplexZ2::label(int degree, std::size_t i) const {
    const int copy = floor_div(degree - block.lo(), period_shift);
    const int r = degree - block.lo() - copy * period_shift;
    const auto& names = block.labels(block.lo() + r);
    std::string base = i < names.size() ? names[i] : "g" + std::to_string(i);
    return "p" + std::to_string(copy) + ":" + base;
}

void validate_periodic(const PeriodicComplexZ2& c) {
    if (c.period_shift < 1) throw std::invalid_argument("period shift must be positive");
    if (c.block.empty()) throw std::invalid_argument("empty period block");
    if (c.block.hi() - c.block.lo() + 1 != c.period_shift)
        throw std::invalid_argument("block must cover exactly one period of degrees");
    const int top = c.block.hi(), bottom = c.block.lo();
    if (c.linking.rows() != c.block.dim(top) || c.linking.cols() != c.block.dim(bottom))
        throw std::invalid_argument("linking matrix has the wrong shape");
    verify_complex(assemble_window(c, bottom - c.period_shift, top + c.period_shift));
}

GradedComplexZ2 assemble_window(const PeriodicComplexZ2& c, int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty window");
    std::vector<std::size_t> dims;
    for (int k = lo; k <= hi; ++k) dims.push_back(c.dim(k));
    GradedComplexZ2 out(lo, dims);
    for (int k = lo; k <= hi; ++k) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < c.dim(k); ++i) names.push_back(c.label(k, i));
        out.set_labels(k, std::move(names));
        if (k > lo) out.set_boundary(k, c.boundary(k));
    }
    return out;
}

DegreeDims periodic_homology_dims(const PeriodicComplexZ2& c, int lo, int hi) {
    if (c.period_shift < 1) throw std::invalid_argument("period shift must be positive");
    if (hi - lo + 1 < 3 * c.period_shift)
        throw std::invalid_argument("window must span at least three periods");
    DegreeDims all = homology_dims(assemble_window(c, lo, hi));
    all.erase(lo);
    all.erase(hi);
    return all;
}

}  // namespace rfh::z2
