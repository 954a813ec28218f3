#include "ellsw/numeric.hpp"

#include "ellsw/errors.hpp"

#include <limits>

namespace ellsw {

long long to_long_checked(const bigint& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw internal_error(std::string(what) + " out of machine range: " + v.str());
    return static_cast<long long>(v);
}

bigint binomial_desc(const bigint& a, const bigint& b) {
    if (b < 0)
        throw precondition_error("binomial lower index must be nonnegative, got " + b.str());
    const long long steps = to_long_checked(b, "binomial lower index");
    bigint result = 1;
    for (long long i = 0; i < steps; ++i) {
        result *= a - i;
        result /= i + 1; // exact: the partial product is the binomial with lower index i+1
    }
    return result;
}

bigint factorial(long long n) {
    bigint result = 1;
    for (long long i = 2; i <= n; ++i)
        result *= i;
    return result;
}

std::string rat_to_string(const bigrat& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace ellsw
