#pragma once

#include "ellsw/int_matrix.hpp"

#include <optional>
#include <vector>

namespace ellsw {

// Exact solution w of coeffs * w = target over the rationals, or nullopt when
// the system is inconsistent. Free variables (if any) are set to zero; the
// returned vector always satisfies the system exactly.
std::optional<std::vector<bigrat>> solve_exact(const int_matrix& coeffs,
                                               const std::vector<bigint>& target);

// Given the free canonical coordinates of the generators (rows of `coords`,
// one per generator) and a symmetric generator-level pairing matrix, find the
// integer matrix w on canonical coordinates with coords * w * coords^T =
// pairing. Returns nullopt when the pairing does not descend (it fails to
// kill the relations) or is not integral on the canonical basis.
std::optional<int_matrix> descend_symmetric_form(const int_matrix& coords,
                                                 const int_matrix& pairing);

// Same for a linear form: integer vector w with coords * w = values, or
// nullopt when the form does not descend or is not integral.
std::optional<std::vector<bigint>> descend_linear_form(const int_matrix& coords,
                                                       const std::vector<bigint>& values);

} // namespace ellsw
