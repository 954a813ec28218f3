#pragma once

#include "ellsw/surface.hpp"

#include <json.hpp>

#include <string>

namespace ellsw {

// Build a surface model from a JSON document. Two kinds are understood:
//
//   {"kind": "log_transform", "name": "...",
//    "zetas": [{"m": 3, "u": 1, "v": 1}, ...]}
//
//   {"kind": "explicit", "name": "...",
//    "generators": ["F", "F1", ...],
//    "relations": [[...], ...],            // one row per relation
//    "intersection_form": [[...], ...],    // on the generators
//    "canonical": [...],
//    "hodge": {"q": 0, "p_g": 0, "chi_O": 1, "c2": 12},
//    "fibration": {"base_genus": 0, "fiber": [...],
//                  "multiple_fibers": [{"m": 2, "class": [...]}, ...]},  // optional
//    "albanese_degrees": [...]}            // required exactly when q = 1
//
// Validation failures throw schema_error naming the offending field.
surface_model load_surface_document(const nlohmann::json& doc);
surface_model load_surface_json(const std::string& text);
surface_model load_surface_file(const std::string& path);

std::string surface_summary_text(const surface_model& s);
nlohmann::json surface_summary_json(const surface_model& s);

} // namespace ellsw
