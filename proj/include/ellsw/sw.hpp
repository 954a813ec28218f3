#pragma once

#include "ellsw/surface.hpp"

namespace ellsw {

// Binomial coefficient with the descending-product convention:
// binom(a, b) = a(a-1)...(a-b+1)/b! for any integer a and b >= 0. In
// particular binom(a, 0) = 1, binom(a, b) = 0 for 0 <= a < b, and
// binom(-a, b) = (-1)^b binom(a+b-1, b).
bigint fm_binomial(const bigint& a, const bigint& b);

struct sw_result {
    bigint value;
    std::vector<fiber_solution> solutions;
};

// Seiberg-Witten invariant of an elliptic fibration for a class with
// beta^2 = beta.[F] = 0:
//   SW(beta) = sum over representations d[F] + sum a_i[F_i] = beta
//              of (-1)^d * binom(2g - 2 + chi_O, d).
sw_result sw_elliptic(const surface_model& s, const group_element& beta);

// Scalar wall-crossing term SW(beta) - SW(k - beta) for p_g = 0:
//   q = 0: 1 if chi(beta) >= 1, else 0 (only the degree-0 Segre term
//          survives on a point Picard variety);
//   q = 1: [2*beta - k]/2 if chi(beta) >= 0, else 0.
bigint wall_crossing_delta(const surface_model& s, const group_element& beta);

} // namespace ellsw
