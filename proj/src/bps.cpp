#include "ellsw/bps.hpp"

#include "ellsw/errors.hpp"

#include <sstream>

namespace ellsw {

std::string bps_spectrum::to_string() const {
    if (entries.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, n] : entries) {
        if (!first)
            os << ", ";
        first = false;
        os << "n_" << g << " = ";
        if (t_power != 0)
            os << "t^" << t_power << "*";
        os << n.str();
    }
    return os.str();
}

bps_spectrum bps_extract(const q_laurent& p) {
    bps_spectrum s;
    s.t_power = p.t_power();
    for (const auto& [e, c] : x_decompose(p))
        s.entries[e / 2 + 1] = c;
    if (s.entries.empty())
        s.t_power = 0;
    return s;
}

q_laurent bps_reconstruct(const bps_spectrum& s) {
    q_laurent p;
    for (const auto& [g, n] : s.entries) {
        if (g < 1)
            throw precondition_error("genus " + std::to_string(g) +
                                     " < 1: x^(2g-2) is not a Laurent polynomial");
        p = p + n * x_power(2 * g - 2);
    }
    if (!p.is_zero())
        p = q_laurent::constant(1, s.t_power) * p;
    return p;
}

} // namespace ellsw
