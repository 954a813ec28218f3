#include "ellsw/int_matrix.hpp"

#include "ellsw/errors.hpp"

#include <sstream>
#include <utility>

namespace ellsw {

int_matrix::int_matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

int_matrix::int_matrix(std::size_t rows, std::size_t cols, std::vector<bigint> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw precondition_error("matrix entry count does not match dimensions");
}

int_matrix int_matrix::identity(std::size_t n) {
    int_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

int_matrix int_matrix::transposed() const {
    int_matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool int_matrix::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool int_matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0)
                return false;
    return true;
}

void int_matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

void int_matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap(at(i, a), at(i, b));
}

void int_matrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
        at(i, j) = -at(i, j);
}

void int_matrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, j) = -at(i, j);
}

void int_matrix::add_row_multiple(std::size_t dst, std::size_t src, const bigint& c) {
    for (std::size_t j = 0; j < cols_; ++j)
        at(dst, j) += c * at(src, j);
}

void int_matrix::add_col_multiple(std::size_t dst, std::size_t src, const bigint& c) {
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, dst) += c * at(i, src);
}

std::string int_matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

int_matrix operator*(const int_matrix& a, const int_matrix& b) {
    if (a.cols() != b.rows())
        throw precondition_error("matrix product dimension mismatch");
    int_matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const bigint& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

bigint determinant(const int_matrix& a) {
    if (a.rows() != a.cols())
        throw precondition_error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    int_matrix m = a;
    bigint sign = 1;
    bigint prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

} // namespace ellsw
