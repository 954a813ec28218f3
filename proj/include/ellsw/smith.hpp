#pragma once

#include "ellsw/int_matrix.hpp"

namespace ellsw {

// Smith normal form u*a*v = d of an integer matrix: u, v unimodular and d
// diagonal with d_1 | d_2 | ... >= 0, zeros last. The reduction is fully
// deterministic, so decompositions are stable across runs and platforms.
struct smith_decomposition {
    int_matrix u;
    int_matrix d;
    int_matrix v;
};

smith_decomposition smith_normal_form(const int_matrix& a);

} // namespace ellsw
