#include "rfhkit/z2/gf2_matrix.hpp"

#include <stdexcept>

#include "rfhkit/z2/bit_kernels.hpp"

namespace rfh::z2 {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::ones(std::size_t rows, std::size_t cols) {
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Gf2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c] & 1);
    }
    return m;
}

Gf2Matrix Gf2Matrix::permutation(const std::vector<std::size_t>& perm) {
    Gf2Matrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m.set(perm[j], j, true);
    return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = data_[r * wpr_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
}

bool Gf2Matrix::is_zero() const { return active_kernels().is_zero(data_.data(), data_.size()); }

std::size_t Gf2Matrix::rank() const {
    const BitKernels& k = active_kernels();
    Gf2Matrix m = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !m.get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t w = 0; w < wpr_; ++w) std::swap(m.row(pivot)[w], m.row(rank)[w]);
        for (std::size_t r = rank + 1; r < rows_; ++r)
            if (m.get(r, c)) k.xor_into(m.row(r), m.row(rank), wpr_);
        ++rank;
    }
    return rank;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::vector<std::vector<int>> Gf2Matrix::to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c);
    return out;
}

std::vector<std::uint64_t> Gf2Matrix::apply(const std::vector<std::uint64_t>& x) const {
    if (x.size() != wpr_) throw std::invalid_argument("vector length does not match columns");
    const BitKernels& k = active_kernels();
    std::vector<std::uint64_t> y((rows_ + 63) / 64, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        if (k.and_parity(row(r), x.data(), wpr_)) y[r / 64] |= std::uint64_t{1} << (r % 64);
    return y;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("GF(2) product shape mismatch");
    const BitKernels& k = active_kernels();
    Gf2Matrix c(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (a.get(r, j)) k.xor_into(c.row(r), b.row(j), c.wpr_);
    return c;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("GF(2) sum shape mismatch");
    Gf2Matrix c = a;
    active_kernels().xor_into(c.data_.data(), b.data_.data(), c.data_.size());
    return c;
}

bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace rfh::z2
