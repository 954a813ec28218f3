#pragma once

#include "ellsw/numeric.hpp"

#include <map>
#include <string>

namespace ellsw {

// Finite Laurent polynomial in q^(1/2) with integer coefficients, tagged with
// a uniform power of the equivariant weight t. Exponents are stored doubled
// so half-integral powers of q stay integral. The zero polynomial is
// normalized to t-power 0.
class q_laurent {
public:
    q_laurent() = default;
    static q_laurent constant(bigint c, long long t_power = 0);
    // c * q^(dbl/2) * t^t_power
    static q_laurent monomial(bigint c, long long doubled_exp, long long t_power = 0);

    bool is_zero() const { return coeffs_.empty(); }
    long long t_power() const { return t_power_; }
    const std::map<long long, bigint>& coeffs() const { return coeffs_; }
    bigint coeff(long long doubled_exp) const;
    long long max_doubled_exp() const; // zero polynomial has no exponents

    bool is_palindromic() const; // invariant under q <-> 1/q

    q_laurent operator-() const;
    q_laurent operator+(const q_laurent& rhs) const; // t-powers must match
    q_laurent operator-(const q_laurent& rhs) const;
    q_laurent operator*(const q_laurent& rhs) const; // t-powers add
    bool operator==(const q_laurent& rhs) const = default;

    std::string to_string() const;

private:
    void normalize();

    std::map<long long, bigint> coeffs_; // doubled exponent -> coefficient
    long long t_power_ = 0;
};

q_laurent operator*(const bigint& c, const q_laurent& p);

// (q^(1/2) + q^(-1/2))^e expanded by the binomial theorem, e >= 0.
q_laurent x_power(long long e);

// Decompose a palindromic polynomial with integral q-exponents into the basis
// x^e, e even >= 0, where x = q^(1/2) + q^(-1/2). Keys of the result are the
// x-exponents. Peels from the top exponent downward; the basis is triangular
// so the integer coefficients are unique.
std::map<long long, bigint> x_decompose(const q_laurent& p);

} // namespace ellsw
