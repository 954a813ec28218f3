#include "ellsw/rational_solve.hpp"

#include "ellsw/errors.hpp"

namespace ellsw {

namespace {

using rat_row = std::vector<bigrat>;

// Row-reduce the augmented system [a | b] and back-substitute. The augmented
// part may have several columns.
std::optional<std::vector<rat_row>> solve_augmented(const int_matrix& a,
                                                    const std::vector<rat_row>& b) {
    const std::size_t n = a.rows(), r = a.cols();
    const std::size_t extra = b.empty() ? 0 : b[0].size();
    std::vector<rat_row> m(n, rat_row(r + extra));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            m[i][j] = bigrat(a.at(i, j));
        for (std::size_t j = 0; j < extra; ++j)
            m[i][r + j] = b[i][j];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && m[sel][col] == 0)
            ++sel;
        if (sel == n)
            continue;
        std::swap(m[sel], m[row]);
        const bigrat inv = bigrat(1) / m[row][col];
        for (std::size_t j = col; j < r + extra; ++j)
            m[row][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            const bigrat f = m[i][col];
            for (std::size_t j = col; j < r + extra; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // remaining rows must be zero on the augmented part too
    for (std::size_t i = row; i < n; ++i)
        for (std::size_t j = r; j < r + extra; ++j)
            if (m[i][j] != 0)
                return std::nullopt;

    std::vector<rat_row> w(r, rat_row(extra));
    for (std::size_t p = 0; p < pivot_col.size(); ++p)
        for (std::size_t j = 0; j < extra; ++j)
            w[pivot_col[p]][j] = m[p][r + j];
    return w;
}

std::optional<std::vector<bigint>> to_integers(const rat_row& v) {
    std::vector<bigint> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1)
            return std::nullopt;
        out[i] = numerator(v[i]);
    }
    return out;
}

} // namespace

std::optional<std::vector<bigrat>> solve_exact(const int_matrix& coeffs,
                                               const std::vector<bigint>& target) {
    if (target.size() != coeffs.rows())
        throw precondition_error("solve_exact dimension mismatch");
    std::vector<rat_row> b(coeffs.rows(), rat_row(1));
    for (std::size_t i = 0; i < target.size(); ++i)
        b[i][0] = bigrat(target[i]);
    auto w = solve_augmented(coeffs, b);
    if (!w)
        return std::nullopt;
    std::vector<bigrat> out(coeffs.cols());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = (*w)[j][0];
    // verify (free variables were zeroed, so re-check consistency)
    for (std::size_t i = 0; i < coeffs.rows(); ++i) {
        bigrat s = 0;
        for (std::size_t j = 0; j < coeffs.cols(); ++j)
            s += bigrat(coeffs.at(i, j)) * out[j];
        if (s != bigrat(target[i]))
            return std::nullopt;
    }
    return out;
}

std::optional<int_matrix> descend_symmetric_form(const int_matrix& coords,
                                                 const int_matrix& pairing) {
    const std::size_t n = coords.rows(), r = coords.cols();
    if (pairing.rows() != n || pairing.cols() != n)
        throw precondition_error("pairing matrix size does not match generator count");

    // First solve coords * y = pairing columnwise, then coords * w^T = y^T.
    std::vector<rat_row> rhs(n, rat_row(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rhs[i][j] = bigrat(pairing.at(i, j));
    auto y = solve_augmented(coords, rhs); // y: r x n with coords * y = pairing
    if (!y)
        return std::nullopt;
    std::vector<rat_row> yt(n, rat_row(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            yt[j][i] = (*y)[i][j];
    auto wt = solve_augmented(coords, yt); // wt: r x r with coords * wt = y^T
    if (!wt)
        return std::nullopt;

    int_matrix w(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (denominator((*wt)[j][i]) != 1)
                return std::nullopt;
            w.at(i, j) = numerator((*wt)[j][i]);
        }

    // verify coords * w * coords^T = pairing exactly
    const int_matrix check = coords * w * coords.transposed();
    if (check != pairing)
        return std::nullopt;
    if (!w.is_symmetric())
        return std::nullopt;
    return w;
}

std::optional<std::vector<bigint>> descend_linear_form(const int_matrix& coords,
                                                       const std::vector<bigint>& values) {
    auto w = solve_exact(coords, values);
    if (!w)
        return std::nullopt;
    return to_integers(*w);
}

} // namespace ellsw
