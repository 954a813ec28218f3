#pragma once

#include "ellsw/q_laurent.hpp"

#include <map>
#include <string>

namespace ellsw {

// BPS spectrum: genus -> integer BPS number, zeros omitted, with the t-power
// tag of the series it was extracted from. The empty spectrum carries
// t-power 0.
struct bps_spectrum {
    std::map<long long, bigint> entries;
    long long t_power = 0;

    bool operator==(const bps_spectrum&) const = default;
    std::string to_string() const;
};

// Unique n_g with p = sum_g n_g * x^(2g-2), x = q^(1/2) + q^(-1/2). Requires
// p palindromic with integral q-exponents; only finite spectra (g >= 1) are
// representable.
bps_spectrum bps_extract(const q_laurent& p);

// Inverse of bps_extract: sum_g n_g * x^(2g-2). All genera must be >= 1.
q_laurent bps_reconstruct(const bps_spectrum& s);

} // namespace ellsw
