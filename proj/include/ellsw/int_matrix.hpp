#pragma once

#include "ellsw/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ellsw {

// Dense matrix over arbitrary-precision integers, row major.
class int_matrix {
public:
    int_matrix() = default;
    int_matrix(std::size_t rows, std::size_t cols);
    int_matrix(std::size_t rows, std::size_t cols, std::vector<bigint> entries);
    static int_matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const bigint& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    bigint& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool operator==(const int_matrix&) const = default;

    int_matrix transposed() const;
    bool is_symmetric() const;
    bool is_diagonal() const;

    // Elementary row/column operations (all unimodular).
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const bigint& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const bigint& c);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<bigint> data_;
};

int_matrix operator*(const int_matrix& a, const int_matrix& b);

// Exact determinant via fraction-free (Bareiss) elimination. Square input.
bigint determinant(const int_matrix& a);

} // namespace ellsw
