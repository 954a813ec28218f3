#pragma once

#include "ellsw/abelian_group.hpp"
#include "ellsw/int_matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ellsw {

struct hodge_data {
    int q = 0;
    int p_g = 0;
    int chi_O = 1;
    int c2 = 0;
};

// Elliptic fibration data: base curve genus, the generic fiber class [F] and
// the multiple fibers m_i * F_i with m_i * [F_i] = [F].
struct fibration_data {
    int base_genus = 0;
    group_element fiber;
    std::vector<std::pair<bigint, group_element>> multiple_fibers;
};

// zeta = (u + v*omega)/m, an m-torsion point of the elliptic curve C/<1, omega>.
struct log_transform_zeta {
    bigint m;
    bigint u;
    bigint v;
};

struct log_transform_input {
    std::string name;
    std::vector<log_transform_zeta> zetas;
};

// Numerical model of a projective surface: H^2 as a finitely generated
// abelian group, the intersection form on its free quotient, the canonical
// class, Hodge numbers, optional fibration data and (when q = 1) the degree
// form of the Albanese fibration.
class surface_model {
public:
    surface_model(std::string name, group_ptr h2, std::vector<std::string> generator_names,
                  std::size_t num_class_generators, int_matrix form_on_free,
                  group_element canonical, hodge_data hodge,
                  std::optional<fibration_data> fibration,
                  std::optional<std::vector<bigint>> albanese_form_on_free);

    const std::string& name() const { return name_; }
    const group_ptr& h2() const { return h2_; }
    const std::vector<std::string>& generator_names() const { return generator_names_; }
    std::size_t num_class_generators() const { return num_class_generators_; }
    const int_matrix& intersection_form() const { return form_; }
    const group_element& canonical() const { return canonical_; }
    const hodge_data& hodge() const { return hodge_; }
    const std::optional<fibration_data>& fibration() const { return fibration_; }
    bool has_albanese_form() const { return albanese_form_.has_value(); }

    // Intersection pairing through the form on the free quotient; torsion
    // pairs to zero.
    bigint pair(const group_element& a, const group_element& b) const;

    // Albanese degree [a] = a.E; defined when q = 1.
    bigint albanese_degree(const group_element& a) const;

    // Element from an integer coefficient vector over the class generators
    // (the generators a surface document exposes for beta input).
    group_element class_element(const std::vector<bigint>& coeffs) const;

private:
    std::string name_;
    group_ptr h2_;
    std::vector<std::string> generator_names_;
    std::size_t num_class_generators_;
    int_matrix form_;
    group_element canonical_;
    hodge_data hodge_;
    std::optional<fibration_data> fibration_;
    std::optional<std::vector<bigint>> albanese_form_;
};

// K = (2g - 2 + chi_O) * [F] + sum_i (m_i - 1) * [F_i].
group_element canonical_class(int base_genus, int chi_O, const fibration_data& fibration);

// Derived numerical invariants of a class beta: the pairings, the arithmetic
// genus h with 2h - 2 = beta(beta + k), the holomorphic Euler characteristic
// 2*chi(beta) = beta^2 - k.beta + 2*chi(O), the point-insertion count
// m = beta(beta - k)/2, and the Albanese degree when q = 1.
struct num_invariants {
    bigint beta_sq;
    bigint beta_k;
    bigint k_sq;
    bigint h;
    bigint chi_beta;
    bigint m;
    std::optional<bigint> alb_deg;
};

num_invariants compute_invariants(const surface_model& s, const group_element& beta);

// Logarithmic transforms of P^1 x (C/<1, omega>) at the torsion points
// zeta_i. Projective exactly when sum zeta_i = 0; then H^2 = Z (+) G with G
// generated by [F], [F_1], ..., [F_r] modulo m_i[F_i] = [F],
// sum u_i[F_i] = 0, sum v_i[F_i] = 0, and the Albanese degree of [F] is the
// index of <1, omega> in <1, omega, zeta_1, ..., zeta_r>.
surface_model build_log_transform(const log_transform_input& input);

} // namespace ellsw
