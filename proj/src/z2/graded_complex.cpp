#include "rfhkit/z2/graded_complex.hpp"

#include <numeric>
#include <stdexcept>

namespace rfh::z2 {

GradedComplexZ2::GradedComplexZ2(int lo, std::vector<std::size_t> dims) : lo_(lo), dims_(std::move(dims)) {}

std::size_t GradedComplexZ2::dim(int k) const {
    if (dims_.empty() || k < lo() || k > hi()) return 0;
    return dims_[static_cast<std::size_t>(k - lo_)];
}

std::size_t GradedComplexZ2::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Gf2Matrix GradedComplexZ2::boundary(int k) const {
    auto it = boundaries_.find(k);
    if (it != boundaries_.end()) return it->second;
    return Gf2Matrix(dim(k - 1), dim(k));
}

void GradedComplexZ2::set_boundary(int k, Gf2Matrix d) {
    if (d.rows() != dim(k - 1) || d.cols() != dim(k))
        throw std::invalid_argument("boundary " + std::to_string(k) + " has shape " + std::to_string(d.rows()) +
                                    "x" + std::to_string(d.cols()) + ", expected " + std::to_string(dim(k - 1)) +
                                    "x" + std::to_string(dim(k)));
    boundaries_[k] = std::move(d);
}

const std::vector<std::string>& GradedComplexZ2::labels(int k) const {
    static const std::vector<std::string> none;
    auto it = labels_.find(k);
    return it == labels_.end() ? none : it->second;
}

void GradedComplexZ2::set_labels(int k, std::vector<std::string> names) {
    if (names.size() != dim(k)) throw std::invalid_argument("label count does not match dimension in degree " + std::to_string(k));
    labels_[k] = std::move(names);
}

void verify_complex(const GradedComplexZ2& c) {
    for (const auto& [k, d] : c.boundaries()) {
        if (d.rows() != c.dim(k - 1) || d.cols() != c.dim(k))
            throw std::invalid_argument("boundary shape mismatch in degree " + std::to_string(k));
    }
    if (c.empty()) return;
    for (int k = c.lo() + 1; k < c.hi(); ++k) {
        if (!(c.boundary(k) * c.boundary(k + 1)).is_zero())
            throw std::invalid_argument("d^2 != 0: d_" + std::to_string(k) + " d_" + std::to_string(k + 1) + " is nonzero");
    }
}

DegreeDims homology_dims(const GradedComplexZ2& c) {
    verify_complex(c);
    DegreeDims out;
    if (c.empty()) return out;
    std::map<int, std::size_t> ranks;
    for (int k = c.lo(); k <= c.hi() + 1; ++k) ranks[k] = c.boundary(k).rank();
    for (int k = c.lo(); k <= c.hi(); ++k) out[k] = c.dim(k) - ranks[k] - ranks[k + 1];
    return out;
}

}  // namespace rfh::z2
