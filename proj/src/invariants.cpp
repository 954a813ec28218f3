#include "ellsw/invariants.hpp"

#include "ellsw/errors.hpp"

namespace ellsw {

q_laurent pt_series(const surface_model& s, const group_element& beta) {
    const num_invariants inv = compute_invariants(s, beta);
    const bigint two_h_minus_2 = inv.beta_sq + inv.beta_k;
    if (two_h_minus_2 < 0)
        throw precondition_error("beta(beta+k) = " + two_h_minus_2.str() +
                                 " < 0: the series is an infinite Laurent series");
    const sw_result sw = sw_elliptic(s, beta);
    if (sw.value == 0)
        return {};
    return sw.value * x_power(to_long_checked(two_h_minus_2, "exponent 2h-2")) *
           q_laurent::constant(1, to_long_checked(inv.m, "t-power"));
}

u_series gw_series(const surface_model& s, const group_element& beta, long long trunc_order) {
    const num_invariants inv = compute_invariants(s, beta);
    const sw_result sw = sw_elliptic(s, beta);
    if (sw.value == 0)
        return u_series::zero(trunc_order);
    const long long e = to_long_checked(inv.beta_sq + inv.beta_k, "exponent 2h-2");
    return sin_power(e, trunc_order).scaled(bigrat(sw.value));
}

bool gwpt_check(const surface_model& s, const group_element& beta, long long trunc_order) {
    const q_laurent pt = pt_series(s, beta); // enforces h >= 1
    const u_series lhs = u_transform(pt, trunc_order);
    const u_series rhs = gw_series(s, beta, trunc_order);
    if (lhs != rhs)
        return false;
    if (pt.is_zero())
        return true; // t^m * 0 carries no t-power to compare
    const num_invariants inv = compute_invariants(s, beta);
    return bigint(pt.t_power()) == inv.m;
}

bigint euler_hilb(const bigint& h, const bigint& n) {
    if (n < 0)
        throw precondition_error("point count must be nonnegative");
    const bigint b = fm_binomial(2 * h - 2, n);
    return is_even(n) ? b : -b;
}

std::string to_string(duality_branch b) {
    switch (b) {
    case duality_branch::negative_case:
        return "negative_case";
    case duality_branch::main_case:
        return "main_case";
    case duality_branch::hypothesis_failure:
        return "hypothesis_failure";
    }
    return "?";
}

duality_report duality_check(const surface_model& s, const group_element& beta) {
    if (s.hodge().p_g != 0)
        throw precondition_error("duality identity needs p_g = 0, got p_g = " +
                                 std::to_string(s.hodge().p_g));

    duality_report rep;
    const num_invariants inv = compute_invariants(s, beta);
    const bigint bbk = 2 * inv.m; // beta(beta - k)

    if (bbk < 0) {
        // both stable-pair invariants vanish identically
        rep.branch = duality_branch::negative_case;
        rep.lhs = {};
        rep.rhs = {};
        rep.holds = true;
        return rep;
    }
    if (bbk > 0) {
        rep.branch = duality_branch::hypothesis_failure;
        rep.reason = "beta(beta-k) = " + bbk.str() +
                     " > 0: beta or k-beta admits no dual divisor class";
        return rep;
    }
    if (s.hodge().q != 1) {
        rep.branch = duality_branch::hypothesis_failure;
        rep.reason = "beta(beta-k) = 0 forces q = 1, got q = " + std::to_string(s.hodge().q);
        return rep;
    }

    rep.branch = duality_branch::main_case;
    const group_element dual = s.canonical() - beta;
    const num_invariants dual_inv = compute_invariants(s, dual);

    const bigint exp_lhs = inv.beta_sq + inv.beta_k;        // 2h - 2 of beta
    const bigint exp_dual = dual_inv.beta_sq + dual_inv.beta_k; // (k-b)(2k-b)
    const bigint exp_twist = 2 * (2 * inv.beta_k - inv.k_sq);   // 2k(2b-k)
    const bigint exp_point = 2 * inv.beta_sq;
    // beta(beta-k) = 0 makes these agree; anything else is a broken form
    if (exp_dual + exp_twist != exp_lhs || exp_lhs != exp_point)
        throw internal_error("duality exponents disagree: (k-b)(2k-b) + 2k(2b-k) = " +
                             (exp_dual + exp_twist).str() + ", b(b+k) = " + exp_lhs.str() +
                             ", 2b^2 = " + exp_point.str());
    if (exp_lhs < 0 || exp_dual < 0)
        throw precondition_error("negative duality exponent: the series are not Laurent polynomials");
    rep.exp_lhs = to_long_checked(exp_lhs, "duality exponent");
    rep.exp_dual = to_long_checked(exp_dual, "duality exponent");
    rep.exp_twist = to_long_checked(exp_twist, "duality exponent");
    rep.exp_point = to_long_checked(exp_point, "duality exponent");

    rep.sw_beta = sw_elliptic(s, beta).value;
    rep.sw_dual = sw_elliptic(s, dual).value;
    const bigint deg = 2 * inv.alb_deg.value() - s.albanese_degree(s.canonical());
    if (!is_even(deg))
        throw precondition_error("[2*beta - k] = " + deg.str() + " is odd");
    rep.half_degree = deg / 2;

    rep.lhs = rep.sw_beta * x_power(rep.exp_lhs);
    // x^exp_dual * x^exp_twist combined so a negative twist exponent never
    // needs a standalone expansion
    rep.rhs = rep.sw_dual * x_power(rep.exp_dual + rep.exp_twist) +
              rep.half_degree * x_power(rep.exp_point);
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

} // namespace ellsw
