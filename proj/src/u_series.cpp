#include "ellsw/u_series.hpp"

#include "ellsw/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ellsw {

u_series::u_series(long long min_order, long long trunc_order, std::vector<bigrat> coeffs)
    : min_order_(min_order), trunc_order_(trunc_order), coeffs_(std::move(coeffs)) {
    trim();
}

void u_series::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
        min_order_ += static_cast<long long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        min_order_ = trunc_order_ + 1;
}

u_series u_series::zero(long long trunc_order) {
    return {trunc_order + 1, trunc_order, {}};
}

u_series u_series::constant(const bigrat& c, long long trunc_order) {
    return monomial(c, 0, trunc_order);
}

u_series u_series::monomial(const bigrat& c, long long order, long long trunc_order) {
    if (c == 0 || order > trunc_order)
        return zero(trunc_order);
    return {order, trunc_order, {c}};
}

bigrat u_series::coeff(long long order) const {
    if (order > trunc_order_)
        throw precondition_error("coefficient of u^" + std::to_string(order) +
                                 " beyond truncation order " + std::to_string(trunc_order_));
    if (order < min_order_ || order >= min_order_ + static_cast<long long>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(order - min_order_)];
}

u_series u_series::operator-() const {
    u_series s = *this;
    for (bigrat& c : s.coeffs_)
        c = -c;
    return s;
}

u_series u_series::operator+(const u_series& rhs) const {
    const long long trunc = std::min(trunc_order_, rhs.trunc_order_);
    const long long lo = std::min(min_order_, rhs.min_order_);
    if (lo > trunc)
        return zero(trunc);
    std::vector<bigrat> coeffs(static_cast<std::size_t>(trunc - lo + 1));
    for (long long k = lo; k <= trunc; ++k)
        coeffs[static_cast<std::size_t>(k - lo)] = coeff(k) + rhs.coeff(k);
    return {lo, trunc, std::move(coeffs)};
}

u_series u_series::operator-(const u_series& rhs) const {
    return *this + (-rhs);
}

u_series u_series::operator*(const u_series& rhs) const {
    // valid up to the first order the unknown tail of either factor reaches
    const long long trunc = std::min(trunc_order_ + rhs.min_order_, rhs.trunc_order_ + min_order_);
    const long long lo = min_order_ + rhs.min_order_;
    if (is_zero() || rhs.is_zero() || lo > trunc)
        return zero(trunc);
    std::vector<bigrat> coeffs(static_cast<std::size_t>(trunc - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const long long oi = min_order_ + static_cast<long long>(i);
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            const long long oj = rhs.min_order_ + static_cast<long long>(j);
            if (oi + oj > trunc)
                break;
            coeffs[static_cast<std::size_t>(oi + oj - lo)] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return {lo, trunc, std::move(coeffs)};
}

u_series u_series::scaled(const bigrat& c) const {
    if (c == 0)
        return zero(trunc_order_);
    u_series s = *this;
    for (bigrat& x : s.coeffs_)
        x *= c;
    return s;
}

u_series u_series::inverse() const {
    if (is_zero())
        throw precondition_error("cannot invert a series that is zero to its truncation order");
    const long long v = min_order_; // trim() ensures the leading stored coefficient is nonzero
    const bigrat lead = coeffs_.front();
    const long long trunc = trunc_order_ - 2 * v;
    const long long lo = -v;
    std::vector<bigrat> out(static_cast<std::size_t>(trunc - lo + 1));
    out[0] = bigrat(1) / lead;
    for (long long o = lo + 1; o <= trunc; ++o) {
        bigrat sum = 0;
        for (long long j = lo; j < o; ++j) {
            const bigrat& qj = out[static_cast<std::size_t>(j - lo)];
            if (qj != 0)
                sum += qj * coeff(o - j);
        }
        out[static_cast<std::size_t>(o - lo)] = -sum / lead;
    }
    return {lo, trunc, std::move(out)};
}

u_series u_series::truncated(long long new_trunc) const {
    if (new_trunc > trunc_order_)
        throw precondition_error("cannot extend a truncated series from order " +
                                 std::to_string(trunc_order_) + " to " + std::to_string(new_trunc));
    if (new_trunc < min_order_)
        return zero(new_trunc);
    std::vector<bigrat> coeffs(coeffs_.begin(),
                               coeffs_.begin() + std::min(coeffs_.size(),
                                                          static_cast<std::size_t>(new_trunc - min_order_ + 1)));
    return {min_order_, new_trunc, std::move(coeffs)};
}

bool u_series::operator==(const u_series& rhs) const {
    return trunc_order_ == rhs.trunc_order_ && min_order_ == rhs.min_order_ &&
           coeffs_ == rhs.coeffs_;
}

std::string u_series::to_string() const {
    std::ostringstream os;
    if (coeffs_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0)
                continue;
            const long long order = min_order_ + static_cast<long long>(k);
            const bool neg = coeffs_[k] < 0;
            if (first) {
                if (neg)
                    os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            const bigrat a = neg ? bigrat(-coeffs_[k]) : coeffs_[k];
            if (order == 0)
                os << rat_to_string(a);
            else
                os << rat_to_string(a) << "*u^" << order;
        }
    }
    os << " + O(u^" << (trunc_order_ + 1) << ")";
    return os.str();
}

namespace {

// 2 - 2*cos u = sum_{j>=1} (-1)^(j+1) * 2 * u^(2j) / (2j)!
u_series two_minus_two_cos(long long trunc_order) {
    u_series s = u_series::zero(trunc_order);
    for (long long j = 1; 2 * j <= trunc_order; ++j) {
        bigrat c = bigrat(2) / bigrat(factorial(2 * j));
        if (j % 2 == 0)
            c = -c;
        s = s + u_series::monomial(c, 2 * j, trunc_order);
    }
    return s;
}

u_series series_power(const u_series& base, long long exponent, long long trunc_order) {
    u_series acc = u_series::constant(1, trunc_order + 2 * std::max(exponent - 1, 0LL));
    for (long long i = 0; i < exponent; ++i)
        acc = acc * base;
    return acc;
}

} // namespace

u_series sin_power(long long e, long long trunc_order) {
    if (e % 2 != 0)
        throw precondition_error("sin_power exponent must be even, got " + std::to_string(e));
    const long long p = e / 2;
    if (p >= 0) {
        // (2 - 2*cos u)^p; products only gain validity, so the base order suffices
        return series_power(two_minus_two_cos(trunc_order), p, trunc_order).truncated(trunc_order);
    }
    // Negative powers: invert (2 - 2*cos u)^|p|, computed with enough slack
    // that the inverse is still exact at trunc_order.
    const long long k = -p;
    const long long base_order = trunc_order + 4 * k + 2;
    const u_series pos = series_power(two_minus_two_cos(base_order), k, base_order);
    const u_series inv = pos.inverse();
    if (inv.trunc_order() < trunc_order)
        throw internal_error("series inversion lost too many orders");
    return inv.truncated(trunc_order);
}

u_series u_transform(const q_laurent& p, long long trunc_order) {
    // x_decompose rejects half-integral and odd q-exponents, so the keys are
    // the even x-exponents of p
    const std::map<long long, bigint> powers = x_decompose(p);

    const u_series base = two_minus_two_cos(trunc_order);
    u_series acc = u_series::zero(trunc_order);
    u_series cur = u_series::constant(1, trunc_order);
    long long cur_exp = 0;
    for (const auto& [e, c] : powers) {
        while (cur_exp < e / 2) {
            cur = (cur * base).truncated(trunc_order);
            ++cur_exp;
        }
        acc = acc + cur.scaled(bigrat(c));
    }
    return acc.truncated(trunc_order);
}

} // namespace ellsw
