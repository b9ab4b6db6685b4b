#pragma once
// Dense GF(2) matrix with bit-packed rows.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rfh::z2 {

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix ones(std::size_t rows, std::size_t cols);
    // Rows given as 0/1 integers; anything odd is 1.
    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols = 0);
    // Entry (perm[j], j) = 1, so the matrix sends basis vector j to perm[j].
    static Gf2Matrix permutation(const std::vector<std::size_t>& perm);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c) { data_[r * wpr_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

    std::uint64_t* row(std::size_t r) { return data_.data() + r * wpr_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * wpr_; }

    bool is_zero() const;
    std::size_t rank() const;
    Gf2Matrix transpose() const;
    std::vector<std::vector<int>> to_rows() const;

    // Bit-vector image; x has cols() entries packed like a row.
    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& x) const;

    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);
    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace rfh::z2
