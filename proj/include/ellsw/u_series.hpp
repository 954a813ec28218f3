#pragma once

#include "ellsw/numeric.hpp"
#include "ellsw/q_laurent.hpp"

#include <string>
#include <vector>

namespace ellsw {

// Truncated Laurent series in u with exact rational coefficients.
// Coefficients are stored for orders [min_order, trunc_order]; everything
// below min_order is exactly zero and everything above trunc_order is
// unknown. Arithmetic propagates the largest truncation order that stays
// exact, using min_order as a lower bound for the valuation.
class u_series {
public:
    static u_series zero(long long trunc_order);
    static u_series constant(const bigrat& c, long long trunc_order);
    static u_series monomial(const bigrat& c, long long order, long long trunc_order);

    long long min_order() const { return min_order_; }
    long long trunc_order() const { return trunc_order_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Exact coefficient of u^order; `order` must not exceed the truncation.
    bigrat coeff(long long order) const;

    u_series operator-() const;
    u_series operator+(const u_series& rhs) const;
    u_series operator-(const u_series& rhs) const;
    u_series operator*(const u_series& rhs) const;
    u_series scaled(const bigrat& c) const;

    // Multiplicative inverse, valid to order trunc_order - 2*valuation.
    u_series inverse() const;

    // Restrict to a smaller truncation order.
    u_series truncated(long long new_trunc) const;

    // Equal truncation order and identical coefficients.
    bool operator==(const u_series& rhs) const;
    bool operator!=(const u_series& rhs) const { return !(*this == rhs); }

    std::string to_string() const; // "1*u^-2 + 1/12 + ... + O(u^25)"

private:
    u_series(long long min_order, long long trunc_order, std::vector<bigrat> coeffs);
    void trim();

    long long min_order_ = 1; // zero series: min_order = trunc_order + 1
    long long trunc_order_ = 0;
    std::vector<bigrat> coeffs_; // index k holds order min_order_ + k
};

// (2*sin(u/2))^e to the given truncation order; e must be even. Negative
// exponents go through exact series inversion of (2 - 2*cos u).
u_series sin_power(long long e, long long trunc_order);

// Substitute x^2 -> 2 - 2*cos u in a polynomial in even powers of
// x = q^(1/2) + q^(-1/2); this realizes -q = e^(iu) without choosing a
// branch of q^(1/2). The t-power tag of the input is ignored.
u_series u_transform(const q_laurent& p, long long trunc_order);

} // namespace ellsw
