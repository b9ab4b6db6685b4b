#pragma once
// Finitely supported Z-graded chain complexes over GF(2).

#include <map>
#include <string>
#include <vector>

#include "rfhkit/z2/gf2_matrix.hpp"

namespace rfh::z2 {

using DegreeDims = std::map<int, std::size_t>;

// Degrees run over [lo, hi]. boundary(k) : C_k -> C_{k-1} has shape dim(k-1) x dim(k);
// degrees outside the range have dimension 0 and every missing boundary is zero.
class GradedComplexZ2 {
public:
    GradedComplexZ2() = default;
    GradedComplexZ2(int lo, std::vector<std::size_t> dims);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }
    std::size_t dim(int k) const;
    std::size_t total_dim() const;

    // Zero matrix of the right shape when no boundary was set.
    Gf2Matrix boundary(int k) const;
    void set_boundary(int k, Gf2Matrix d);
    const std::map<int, Gf2Matrix>& boundaries() const { return boundaries_; }

    const std::vector<std::string>& labels(int k) const;
    void set_labels(int k, std::vector<std::string> names);

private:
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::map<int, Gf2Matrix> boundaries_;
    std::map<int, std::vector<std::string>> labels_;
};

// Throws std::invalid_argument on a shape mismatch or a nonzero composite ∂_{k}∂_{k+1}.
void verify_complex(const GradedComplexZ2& c);

// dim H_k = dim C_k - rank ∂_k - rank ∂_{k+1}; verifies the complex first.
DegreeDims homology_dims(const GradedComplexZ2& c);

}  // namespace rfh::z2
