#include "ellsw/surface.hpp"

#include "ellsw/errors.hpp"
#include "ellsw/lattice.hpp"
#include "ellsw/rational_solve.hpp"

#include <sstream>

namespace ellsw {

surface_model::surface_model(std::string name, group_ptr h2,
                             std::vector<std::string> generator_names,
                             std::size_t num_class_generators, int_matrix form_on_free,
                             group_element canonical, hodge_data hodge,
                             std::optional<fibration_data> fibration,
                             std::optional<std::vector<bigint>> albanese_form_on_free)
    : name_(std::move(name)),
      h2_(std::move(h2)),
      generator_names_(std::move(generator_names)),
      num_class_generators_(num_class_generators),
      form_(std::move(form_on_free)),
      canonical_(std::move(canonical)),
      hodge_(hodge),
      fibration_(std::move(fibration)),
      albanese_form_(std::move(albanese_form_on_free)) {
    if (!h2_)
        throw precondition_error("surface model without an H^2 group");
    if (hodge_.chi_O != 1 - hodge_.q + hodge_.p_g)
        throw schema_error("hodge: chi_O must equal 1 - q + p_g (got chi_O=" +
                           std::to_string(hodge_.chi_O) + ", q=" + std::to_string(hodge_.q) +
                           ", p_g=" + std::to_string(hodge_.p_g) + ")");
    if (generator_names_.size() != h2_->num_generators())
        throw internal_error("generator name count does not match the presentation");
    if (num_class_generators_ > h2_->num_generators())
        throw internal_error("class generator count exceeds the presentation");
    if (form_.rows() != h2_->free_rank() || form_.cols() != h2_->free_rank())
        throw schema_error("intersection_form: expected a " + std::to_string(h2_->free_rank()) +
                           "x" + std::to_string(h2_->free_rank()) +
                           " matrix on the free quotient");
    if (!form_.is_symmetric())
        throw schema_error("intersection_form: matrix is not symmetric");
    if (!canonical_.group()->same_structure(*h2_))
        throw internal_error("canonical class lies in a different group");
    if (albanese_form_ && albanese_form_->size() != h2_->free_rank())
        throw internal_error("albanese form length does not match the free rank");
    if ((hodge_.q == 1) != albanese_form_.has_value())
        throw schema_error("albanese_degrees: required exactly when q = 1");
    if (fibration_) {
        for (const auto& [m, f] : fibration_->multiple_fibers) {
            if (m < 2)
                throw schema_error("fibration: multiple fiber multiplicity must be >= 2");
            if (m * f != fibration_->fiber)
                throw schema_error("fibration: m*[F_i] = [F] fails for a multiple fiber");
        }
    }
}

bigint surface_model::pair(const group_element& a, const group_element& b) const {
    if (!a.group()->same_structure(*h2_) || !b.group()->same_structure(*h2_))
        throw precondition_error("pairing classes from a different surface");
    bigint s = 0;
    for (std::size_t i = 0; i < form_.rows(); ++i) {
        if (a.free_part()[i] == 0)
            continue;
        for (std::size_t j = 0; j < form_.cols(); ++j)
            s += a.free_part()[i] * form_.at(i, j) * b.free_part()[j];
    }
    return s;
}

bigint surface_model::albanese_degree(const group_element& a) const {
    if (!albanese_form_)
        throw precondition_error("surface has no Albanese degree form (q != 1)");
    bigint s = 0;
    for (std::size_t i = 0; i < albanese_form_->size(); ++i)
        s += (*albanese_form_)[i] * a.free_part()[i];
    return s;
}

group_element surface_model::class_element(const std::vector<bigint>& coeffs) const {
    if (coeffs.size() != num_class_generators_)
        throw schema_error("beta: expected " + std::to_string(num_class_generators_) +
                           " coefficients, got " + std::to_string(coeffs.size()));
    std::vector<bigint> full(h2_->num_generators());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        full[i] = coeffs[i];
    return h2_->element(full);
}

group_element canonical_class(int base_genus, int chi_O, const fibration_data& fibration) {
    group_element k = bigint(2 * base_genus - 2 + chi_O) * fibration.fiber;
    for (const auto& [m, f] : fibration.multiple_fibers)
        k = k + (m - 1) * f;
    return k;
}

num_invariants compute_invariants(const surface_model& s, const group_element& beta) {
    if (!beta.group()->same_structure(*s.h2()))
        throw precondition_error("class does not lie in the surface's H^2");
    num_invariants inv;
    inv.beta_sq = s.pair(beta, beta);
    inv.beta_k = s.pair(beta, s.canonical());
    inv.k_sq = s.pair(s.canonical(), s.canonical());

    const bigint two_h_minus_2 = inv.beta_sq + inv.beta_k;
    if (!is_even(two_h_minus_2))
        throw schema_error("intersection_form: beta(beta+k) = " + two_h_minus_2.str() +
                           " is odd, so the arithmetic genus is not integral");
    inv.h = two_h_minus_2 / 2 + 1;

    const bigint two_m = inv.beta_sq - inv.beta_k;
    if (!is_even(two_m))
        throw schema_error("intersection_form: beta(beta-k) = " + two_m.str() +
                           " is odd, so chi(beta) is not integral");
    inv.m = two_m / 2;
    inv.chi_beta = inv.m + s.hodge().chi_O;

    if (s.has_albanese_form())
        inv.alb_deg = s.albanese_degree(beta);
    return inv;
}

surface_model build_log_transform(const log_transform_input& input) {
    for (std::size_t i = 0; i < input.zetas.size(); ++i) {
        const log_transform_zeta& z = input.zetas[i];
        if (z.m < 1)
            throw schema_error("zetas[" + std::to_string(i) + "]: multiplicity must be >= 1");
        if (gcd(gcd(z.m, z.u), z.v) != 1)
            throw schema_error("zetas[" + std::to_string(i) +
                               "]: gcd(m, u, v) must be 1 for an exact m-torsion point");
    }

    // Projectivity: the torsion points must sum to zero on the fiber.
    bigrat sum_u = 0, sum_v = 0;
    for (const log_transform_zeta& z : input.zetas) {
        sum_u += bigrat(z.u, z.m);
        sum_v += bigrat(z.v, z.m);
    }
    if (sum_u != 0 || sum_v != 0)
        throw schema_error("zetas: surface is not projective, the torsion points sum to " +
                           rat_to_string(sum_u) + " + (" + rat_to_string(sum_v) +
                           ")*omega instead of 0");

    const std::size_t r = input.zetas.size();
    // Presentation generators: F, F_1, ..., F_r and one extra free generator
    // E for the Z summand of H^2 (the Albanese fiber direction).
    const std::size_t n = r + 2;
    int_matrix relations(r + 2, n);
    for (std::size_t i = 0; i < r; ++i) {
        relations.at(i, 0) = -1;
        relations.at(i, i + 1) = input.zetas[i].m; // m_i F_i = F
    }
    for (std::size_t i = 0; i < r; ++i) {
        relations.at(r, i + 1) = input.zetas[i].u;     // sum u_i F_i = 0
        relations.at(r + 1, i + 1) = input.zetas[i].v; // sum v_i F_i = 0
    }
    group_ptr h2 = present_group(n, relations);

    std::vector<std::string> names;
    names.push_back("F");
    for (std::size_t i = 0; i < r; ++i)
        names.push_back("F" + std::to_string(i + 1));
    names.push_back("E");

    // Albanese degrees from the lattice index [<1, omega, zeta_*> : <1, omega>].
    std::vector<rational_point> extras;
    for (const log_transform_zeta& z : input.zetas)
        extras.push_back({bigrat(z.u, z.m), bigrat(z.v, z.m)});
    const bigint index = lattice_index({1, 0}, {0, 1}, extras);

    std::vector<bigint> degrees(n);
    degrees[0] = index; // [F] = E.F
    for (std::size_t i = 0; i < r; ++i) {
        if (index % input.zetas[i].m != 0)
            throw internal_error("Albanese degree of F" + std::to_string(i + 1) +
                                 " is not integral");
        degrees[i + 1] = index / input.zetas[i].m;
    }
    degrees[n - 1] = 0; // E.E = 0

    int_matrix gen_coords(n, h2->free_rank());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < h2->free_rank(); ++j)
            gen_coords.at(i, j) = h2->generator(i).free_part()[j];

    auto alb_form = descend_linear_form(gen_coords, degrees);
    if (!alb_form)
        throw internal_error("Albanese degree form does not descend to H^2");

    // Intersection pairing on generators: fiber classes pair to zero among
    // themselves; E pairs with everything by its Albanese degree.
    int_matrix pairing(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        pairing.at(i, n - 1) = degrees[i];
        pairing.at(n - 1, i) = degrees[i];
    }
    pairing.at(n - 1, n - 1) = 0;
    auto form = descend_symmetric_form(gen_coords, pairing);
    if (!form)
        throw internal_error("intersection form does not descend to H^2");

    fibration_data fibration{0, h2->generator(0), {}};
    for (std::size_t i = 0; i < r; ++i)
        if (input.zetas[i].m >= 2)
            fibration.multiple_fibers.emplace_back(input.zetas[i].m, h2->generator(i + 1));

    const hodge_data hodge{1, 0, 0, 0};
    group_element canonical = canonical_class(0, hodge.chi_O, fibration);

    std::string name = input.name;
    if (name.empty()) {
        std::ostringstream os;
        os << "log transform (";
        for (std::size_t i = 0; i < r; ++i)
            os << (i ? ", " : "") << "m=" << input.zetas[i].m.str();
        os << ")";
        name = os.str();
    }

    return surface_model(std::move(name), h2, std::move(names), r + 1, std::move(*form),
                         std::move(canonical), hodge, std::move(fibration), std::move(alb_form));
}

} // namespace ellsw
