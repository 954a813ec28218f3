#include "ellsw/sw.hpp"

#include "ellsw/errors.hpp"

namespace ellsw {

bigint fm_binomial(const bigint& a, const bigint& b) {
    return binomial_desc(a, b);
}

sw_result sw_elliptic(const surface_model& s, const group_element& beta) {
    if (!s.fibration())
        throw precondition_error("surface has no elliptic fibration data");
    const fibration_data& fib = *s.fibration();

    const bigint beta_sq = s.pair(beta, beta);
    if (beta_sq != 0)
        throw precondition_error("beta^2 = " + beta_sq.str() + " != 0");
    const bigint beta_f = s.pair(beta, fib.fiber);
    if (beta_f != 0)
        throw precondition_error("beta.[F] = " + beta_f.str() + " != 0");

    sw_result result;
    result.solutions = fiber_representations(fib.fiber, fib.multiple_fibers, beta);
    const bigint weight_base = 2 * fib.base_genus - 2 + s.hodge().chi_O;
    result.value = 0;
    for (const fiber_solution& sol : result.solutions) {
        const bigint term = fm_binomial(weight_base, sol.d);
        result.value += is_even(sol.d) ? term : -term;
    }
    return result;
}

bigint wall_crossing_delta(const surface_model& s, const group_element& beta) {
    if (s.hodge().p_g != 0)
        throw precondition_error("wall-crossing term needs p_g = 0, got p_g = " +
                                 std::to_string(s.hodge().p_g));
    const int q = s.hodge().q;
    if (q != 0 && q != 1)
        throw precondition_error("wall-crossing term implemented for q in {0, 1}, got q = " +
                                 std::to_string(q));

    const num_invariants inv = compute_invariants(s, beta);
    if (q == 0)
        return inv.chi_beta >= 1 ? 1 : 0;

    if (inv.chi_beta < 0)
        return 0;
    const bigint deg = 2 * s.albanese_degree(beta) - s.albanese_degree(s.canonical());
    if (!is_even(deg))
        throw precondition_error("[2*beta - k] = " + deg.str() + " is odd");
    return deg / 2;
}

} // namespace ellsw
