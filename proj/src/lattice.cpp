#include "ellsw/lattice.hpp"

#include "ellsw/errors.hpp"
#include "ellsw/int_matrix.hpp"
#include "ellsw/smith.hpp"

namespace ellsw {

namespace {

bigint lcm(const bigint& a, const bigint& b) {
    return a / gcd(a, b) * b;
}

} // namespace

bigint lattice_index(const rational_point& base1, const rational_point& base2,
                     const std::vector<rational_point>& extras) {
    if (base1.x * base2.y - base1.y * base2.x == 0)
        throw precondition_error("lattice base vectors are linearly dependent");

    std::vector<rational_point> gens{base1, base2};
    gens.insert(gens.end(), extras.begin(), extras.end());

    bigint scale = 1;
    for (const rational_point& p : gens) {
        scale = lcm(scale, denominator(p.x));
        scale = lcm(scale, denominator(p.y));
    }

    auto scaled = [&](const bigrat& r) -> bigint {
        const bigrat v = r * scale;
        return numerator(v); // integral after clearing denominators
    };

    int_matrix m(2, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        m.at(0, j) = scaled(gens[j].x);
        m.at(1, j) = scaled(gens[j].y);
    }

    const smith_decomposition snf = smith_normal_form(m);
    const bigint fine_covolume = snf.d.at(0, 0) * snf.d.at(1, 1);
    const bigint coarse_covolume =
        abs(scaled(base1.x) * scaled(base2.y) - scaled(base1.y) * scaled(base2.x));
    if (fine_covolume == 0 || coarse_covolume % fine_covolume != 0)
        throw internal_error("lattice index is not integral");
    return coarse_covolume / fine_covolume;
}

} // namespace ellsw
