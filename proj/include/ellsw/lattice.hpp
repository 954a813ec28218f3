#pragma once

#include "ellsw/numeric.hpp"

#include <vector>

namespace ellsw {

// A point a + b*omega of the rational span of a plane lattice, stored as the
// coordinate pair (a, b).
struct rational_point {
    bigrat x;
    bigrat y;
};

// Index [L' : L] of the lattice L spanned by base_1, base_2 inside the lattice
// L' spanned by the base together with the extra generators. Computed as
// covol(L) / covol(L') after clearing denominators, with the covolumes read
// off a Smith reduction of the generator matrix.
bigint lattice_index(const rational_point& base1, const rational_point& base2,
                     const std::vector<rational_point>& extras);

} // namespace ellsw
