#include "ellsw/q_laurent.hpp"

#include "ellsw/errors.hpp"

#include <sstream>

namespace ellsw {

q_laurent q_laurent::constant(bigint c, long long t_power) {
    return monomial(std::move(c), 0, t_power);
}

q_laurent q_laurent::monomial(bigint c, long long doubled_exp, long long t_power) {
    q_laurent p;
    p.t_power_ = t_power;
    if (c != 0)
        p.coeffs_[doubled_exp] = std::move(c);
    p.normalize();
    return p;
}

void q_laurent::normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
    if (coeffs_.empty())
        t_power_ = 0;
}

bigint q_laurent::coeff(long long doubled_exp) const {
    auto it = coeffs_.find(doubled_exp);
    return it == coeffs_.end() ? bigint(0) : it->second;
}

long long q_laurent::max_doubled_exp() const {
    if (coeffs_.empty())
        throw precondition_error("zero polynomial has no exponents");
    return coeffs_.rbegin()->first;
}

bool q_laurent::is_palindromic() const {
    for (const auto& [e, c] : coeffs_)
        if (coeff(-e) != c)
            return false;
    return true;
}

q_laurent q_laurent::operator-() const {
    q_laurent p = *this;
    for (auto& [e, c] : p.coeffs_)
        c = -c;
    return p;
}

q_laurent q_laurent::operator+(const q_laurent& rhs) const {
    if (is_zero())
        return rhs;
    if (rhs.is_zero())
        return *this;
    if (t_power_ != rhs.t_power_)
        throw precondition_error("cannot add series with t-powers " + std::to_string(t_power_) +
                                 " and " + std::to_string(rhs.t_power_));
    q_laurent p = *this;
    for (const auto& [e, c] : rhs.coeffs_)
        p.coeffs_[e] += c;
    p.normalize();
    return p;
}

q_laurent q_laurent::operator-(const q_laurent& rhs) const {
    return *this + (-rhs);
}

q_laurent q_laurent::operator*(const q_laurent& rhs) const {
    q_laurent p;
    p.t_power_ = t_power_ + rhs.t_power_;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_)
            p.coeffs_[e1 + e2] += c1 * c2;
    p.normalize();
    return p;
}

q_laurent operator*(const bigint& c, const q_laurent& p) {
    return q_laurent::constant(c, 0) * p;
}

namespace {

std::string exponent_string(long long dbl) {
    if (dbl % 2 == 0)
        return std::to_string(dbl / 2);
    std::ostringstream os;
    os << "(" << dbl << "/2)";
    return os.str();
}

} // namespace

std::string q_laurent::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    if (t_power_ != 0)
        os << "t^" << t_power_ << "*(";
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bigint a = abs(c);
        if (e == 0) {
            os << a.str();
        } else {
            if (a != 1)
                os << a.str() << "*";
            os << "q^" << exponent_string(e);
        }
    }
    if (t_power_ != 0)
        os << ")";
    return os.str();
}

q_laurent x_power(long long e) {
    if (e < 0)
        throw precondition_error("x_power exponent must be nonnegative");
    q_laurent p;
    for (long long j = 0; j <= e; ++j)
        p = p + q_laurent::monomial(binomial_desc(e, j), 2 * j - e);
    return p;
}

std::map<long long, bigint> x_decompose(const q_laurent& p) {
    if (!p.is_palindromic())
        throw precondition_error("series is not invariant under q <-> 1/q");
    for (const auto& [e, c] : p.coeffs())
        if (e % 2 != 0)
            throw precondition_error("series has a half-integral q-exponent (doubled exponent " +
                                     std::to_string(e) + " is odd)");

    std::map<long long, bigint> out;
    q_laurent rest = p;
    while (!rest.is_zero()) {
        const long long top = rest.max_doubled_exp();
        if (top < 0)
            throw internal_error("palindromic peeling left a negative top exponent");
        const bigint c = rest.coeff(top);
        out[top] = c;
        rest = rest - c * x_power(top);
    }
    return out;
}

} // namespace ellsw
