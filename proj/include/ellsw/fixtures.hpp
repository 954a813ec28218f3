#pragma once

#include "ellsw/surface.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ellsw::fixtures {

// Embedded surface documents, so checks that rely on them need no files on
// disk. The same documents ship under surfaces/ for use with the CLI.
extern const char* const rational_elliptic_json;
extern const char* const dolgachev_json;
extern const char* const hyperelliptic_json;
extern const char* const example33_json;
extern const char* const negative_case_json;
extern const char* const nonprojective_json;

surface_model rational_elliptic();
surface_model dolgachev();
surface_model hyperelliptic();
surface_model example33();
surface_model negative_case();

// (file name, document) pairs for every embedded fixture.
std::vector<std::pair<std::string, const char*>> all();

} // namespace ellsw::fixtures
