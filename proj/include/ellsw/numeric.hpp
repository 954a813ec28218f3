#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ellsw {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Narrowing conversion that refuses to wrap around. `what` names the value
// in the exception message.
long long to_long_checked(const bigint& v, const char* what);

// Descending-product binomial a(a-1)...(a-b+1)/b!, defined for any integer a.
// This is the generalized binomial coefficient; every partial product is an
// exact integer so no rational arithmetic is needed.
bigint binomial_desc(const bigint& a, const bigint& b);

bigint factorial(long long n);

// Canonical decimal rendering: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const bigrat& r);

inline bool is_even(const bigint& v) { return (v & 1) == 0; }

} // namespace ellsw
