#pragma once

#include <cstddef>
#include <vector>

#include "simhom/integer.hpp"

namespace simhom {

/// Dense integer matrix, row-major. Sized for desk-scale exact linear
/// algebra; a sparse triplet view is available for serialization.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator*(const IntMatrix& other) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;

    // Elementary operations (the only mutations Smith reduction needs).
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
    /// col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

    std::vector<Int> col(std::size_t j) const;

    struct Triplet {
        std::size_t row;
        std::size_t col;
        Int value;
        bool operator==(const Triplet&) const = default;
    };

    /// Nonzero entries in row-major order.
    std::vector<Triplet> triplets() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_;
};

} // namespace simhom
