#include "ellsw/fixtures.hpp"

#include "ellsw/surface_doc.hpp"

namespace ellsw::fixtures {

const char* const rational_elliptic_json = R"({
  "kind": "explicit",
  "name": "rational elliptic surface",
  "generators": ["F"],
  "relations": [],
  "intersection_form": [[0]],
  "canonical": [-1],
  "hodge": {"q": 0, "p_g": 0, "chi_O": 1, "c2": 12},
  "fibration": {"base_genus": 0, "fiber": [1], "multiple_fibers": []}
}
)";

const char* const dolgachev_json = R"({
  "kind": "explicit",
  "name": "Dolgachev surface with fibers of multiplicity 2 and 3",
  "generators": ["F", "F1", "F2"],
  "relations": [[-1, 2, 0], [-1, 0, 3]],
  "intersection_form": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
  "canonical": [-1, 1, 2],
  "hodge": {"q": 0, "p_g": 0, "chi_O": 1, "c2": 12},
  "fibration": {"base_genus": 0, "fiber": [1, 0, 0],
                "multiple_fibers": [{"m": 2, "class": [0, 1, 0]},
                                    {"m": 3, "class": [0, 0, 1]}]}
}
)";

const char* const hyperelliptic_json = R"({
  "kind": "explicit",
  "name": "hyper-elliptic surface, Albanese fibration",
  "generators": ["F"],
  "relations": [],
  "intersection_form": [[0]],
  "canonical": [0],
  "hodge": {"q": 1, "p_g": 0, "chi_O": 0, "c2": 0},
  "fibration": {"base_genus": 1, "fiber": [1], "multiple_fibers": []},
  "albanese_degrees": [0]
}
)";

const char* const example33_json = R"({
  "kind": "log_transform",
  "name": "log transform of P1 x E with four triple fibers",
  "zetas": [{"m": 3, "u": 1, "v": 1},
            {"m": 3, "u": 1, "v": 0},
            {"m": 3, "u": 1, "v": 0},
            {"m": 3, "u": -3, "v": -1}]
}
)";

const char* const negative_case_json = R"({
  "kind": "explicit",
  "name": "hyperbolic plane model with k = 0",
  "generators": ["A", "B"],
  "relations": [],
  "intersection_form": [[0, 1], [1, 0]],
  "canonical": [0, 0],
  "hodge": {"q": 0, "p_g": 0, "chi_O": 1, "c2": 12}
}
)";

const char* const nonprojective_json = R"({
  "kind": "log_transform",
  "name": "single half-period log transform (not projective)",
  "zetas": [{"m": 2, "u": 1, "v": 0}]
}
)";

surface_model rational_elliptic() { return load_surface_json(rational_elliptic_json); }
surface_model dolgachev() { return load_surface_json(dolgachev_json); }
surface_model hyperelliptic() { return load_surface_json(hyperelliptic_json); }
surface_model example33() { return load_surface_json(example33_json); }
surface_model negative_case() { return load_surface_json(negative_case_json); }

std::vector<std::pair<std::string, const char*>> all() {
    return {{"rational_elliptic.json", rational_elliptic_json},
            {"dolgachev.json", dolgachev_json},
            {"hyperelliptic.json", hyperelliptic_json},
            {"example33.json", example33_json},
            {"negative_case.json", negative_case_json},
            {"nonprojective.json", nonprojective_json}};
}

} // namespace ellsw::fixtures
