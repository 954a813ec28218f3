#include "ellsw/smith.hpp"

#include <optional>
#include <utility>

namespace ellsw {

namespace {

// Move the minimal-absolute-value nonzero entry of the trailing submatrix to
// position (t, t). Returns false when the submatrix is identically zero.
bool move_min_pivot(int_matrix& d, int_matrix& u, int_matrix& v, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    bigint best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0)
                continue;
            bigint a = abs(d.at(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
            }
        }
    if (!best)
        return false;
    d.swap_rows(t, best->first);
    u.swap_rows(t, best->first);
    d.swap_cols(t, best->second);
    v.swap_cols(t, best->second);
    return true;
}

// Euclidean clearing of column t below the pivot and row t right of it.
// Swaps pull strictly smaller remainders into the pivot, so this terminates
// with the pivot equal to the gcd of everything it touched.
void clear_row_and_column(int_matrix& d, int_matrix& u, int_matrix& v, std::size_t t) {
    for (;;) {
        bool swapped = false;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
            while (d.at(i, t) != 0) {
                const bigint q = d.at(i, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (d.at(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    swapped = true;
                }
            }
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
            while (d.at(t, j) != 0) {
                const bigint q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    swapped = true;
                }
            }
        }
        if (!swapped)
            break;
    }
}

std::optional<std::size_t> find_nondivisible_row(const int_matrix& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
            if (d.at(i, j) % d.at(t, t) != 0)
                return i;
    return std::nullopt;
}

} // namespace

smith_decomposition smith_normal_form(const int_matrix& a) {
    smith_decomposition s{int_matrix::identity(a.rows()), a, int_matrix::identity(a.cols())};
    const std::size_t limit = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < limit; ++t) {
        if (!move_min_pivot(s.d, s.u, s.v, t))
            break;
        for (;;) {
            clear_row_and_column(s.d, s.u, s.v, t);
            // the pivot must divide the whole trailing submatrix, otherwise
            // fold an offending row into row t and reduce again
            auto bad_row = find_nondivisible_row(s.d, t);
            if (!bad_row)
                break;
            s.d.add_row_multiple(t, *bad_row, 1);
            s.u.add_row_multiple(t, *bad_row, 1);
        }
    }
    for (std::size_t t = 0; t < limit; ++t)
        if (s.d.at(t, t) < 0) {
            s.d.negate_row(t);
            s.u.negate_row(t);
        }
    return s;
}

} // namespace ellsw
