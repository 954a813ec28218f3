#pragma once

#include "ellsw/int_matrix.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ellsw {

class abelian_group;
using group_ptr = std::shared_ptr<const abelian_group>;

// Element of a finitely generated abelian group in canonical coordinates:
// an integer vector on the free part and residues reduced into [0, d_i) on
// the torsion part.
class group_element {
public:
    group_element(group_ptr group, std::vector<bigint> free_part, std::vector<bigint> torsion_part);

    const group_ptr& group() const { return group_; }
    const std::vector<bigint>& free_part() const { return free_; }
    const std::vector<bigint>& torsion_part() const { return torsion_; }

    bool is_zero() const;
    bool has_infinite_order() const;

    group_element operator-() const;
    group_element operator+(const group_element& rhs) const;
    group_element operator-(const group_element& rhs) const;
    bool operator==(const group_element& rhs) const;
    bool operator!=(const group_element& rhs) const { return !(*this == rhs); }

    std::string to_string() const; // "(f1, ..., fr; t1, ..., tk)"

private:
    group_ptr group_;
    std::vector<bigint> free_;
    std::vector<bigint> torsion_;
};

group_element operator*(const bigint& n, const group_element& e);

// Finitely generated abelian group in canonical form Z^r (+) Z/d_1 (+) ...
// (+) Z/d_k with 2 <= d_1 | d_2 | ... | d_k, remembering the canonical
// coordinates of the generators it was presented by. The canonical form is
// an isomorphism invariant of the presentation; the generator coordinates
// are pinned down by the deterministic Smith reduction plus a sign
// normalization of the free coordinate functionals (first nonzero generator
// coordinate positive).
class abelian_group : public std::enable_shared_from_this<abelian_group> {
public:
    std::size_t free_rank() const { return free_rank_; }
    const std::vector<bigint>& torsion_orders() const { return torsion_orders_; }
    std::size_t num_generators() const { return gen_free_.size(); }

    group_element zero() const;
    group_element generator(std::size_t i) const;
    // Z-linear combination of the presentation generators.
    group_element element(const std::vector<bigint>& generator_coeffs) const;

    bool same_structure(const abelian_group& other) const;
    std::string structure_string() const; // e.g. "Z^2 + Z/3"

    friend group_ptr present_group(std::size_t num_generators, const int_matrix& relations);

private:
    abelian_group() = default;

    std::size_t free_rank_ = 0;
    std::vector<bigint> torsion_orders_;
    std::vector<std::vector<bigint>> gen_free_;
    std::vector<std::vector<bigint>> gen_torsion_;
};

// Canonical form of the abelian group on `num_generators` generators modulo
// the rows of `relations` (one relation per row).
group_ptr present_group(std::size_t num_generators, const int_matrix& relations);

// One representation d*[F] + sum_i a_i*[F_i] of a target class, with d >= 0
// and 0 <= a_i < m_i.
struct fiber_solution {
    bigint d;
    std::vector<bigint> residues;

    bool operator==(const fiber_solution&) const = default;
};

bool operator<(const fiber_solution& a, const fiber_solution& b);

// Complete list of representations of `target` as d*fiber + sum a_i*F_i,
// found by iterating the residue tuples and solving for the unique d on the
// free coordinates. The fiber class must have infinite order.
std::vector<fiber_solution> fiber_representations(
    const group_element& fiber,
    const std::vector<std::pair<bigint, group_element>>& multiple_fibers,
    const group_element& target);

} // namespace ellsw
