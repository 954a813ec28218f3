#pragma once

#include "ellsw/bps.hpp"
#include "ellsw/q_laurent.hpp"
#include "ellsw/sw.hpp"
#include "ellsw/u_series.hpp"

#include <string>

namespace ellsw {

// Stable-pair generating series with the maximal number of point insertions
// m = beta(beta - k)/2:
//   PT_beta = t^m * SW(beta) * x^(2h-2), x = q^(1/2) + q^(-1/2),
// with 2h - 2 = beta(beta + k). Requires h >= 1 so the series is a Laurent
// polynomial.
q_laurent pt_series(const surface_model& s, const group_element& beta);

// Gromov-Witten side of the same count: t^m * SW(beta) * (2 sin(u/2))^(2h-2),
// truncated at the given order. Negative 2h - 2 is allowed.
u_series gw_series(const surface_model& s, const group_element& beta, long long trunc_order);

// The correspondence check: u_transform(pt_series) equals gw_series to the
// given order and the t-powers agree. Requires h >= 1.
bool gwpt_check(const surface_model& s, const group_element& beta, long long trunc_order);

// Coefficient of q^n in (1 - q)^(2h-2): the Euler number e(C^[n]) of the
// Hilbert scheme of n points on a smooth curve of genus h, and equally the
// tautological integral over S^[n] it computes.
bigint euler_hilb(const bigint& h, const bigint& n);

enum class duality_branch { negative_case, main_case, hypothesis_failure };

std::string to_string(duality_branch b);

// Both sides of the stable-pair duality identity
//   PT_beta = PT_{k-beta} * x^(2k(2beta-k)) + [2beta-k]/2 * x^(2beta^2)
// for p_g = 0. When beta(beta - k) < 0 both series vanish identically; the
// identity itself applies when beta(beta - k) = 0 and q = 1.
struct duality_report {
    duality_branch branch = duality_branch::hypothesis_failure;
    q_laurent lhs;
    q_laurent rhs;
    bool holds = false;
    std::string reason;

    // per-term values of the main case
    bigint sw_beta;
    bigint sw_dual;      // SW(k - beta)
    bigint half_degree;  // [2*beta - k]/2
    long long exp_lhs = 0;   // 2h - 2 of beta
    long long exp_dual = 0;  // 2h - 2 of k - beta
    long long exp_twist = 0; // 2k(2*beta - k)
    long long exp_point = 0; // 2*beta^2
};

duality_report duality_check(const surface_model& s, const group_element& beta);

} // namespace ellsw
