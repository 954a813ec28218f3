#pragma once

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace ellsw {

// One reproducible numeric claim: a frozen expected value and a computation
// that should reproduce it.
struct claim {
    std::string id;
    std::string expected;
    std::function<std::string()> compute;
};

struct claim_row {
    std::string id;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct run_report {
    std::string command;
    std::string filter;
    std::vector<claim_row> rows;
    bool all_pass = true;
};

// Evaluate every claim whose id contains `filter` (empty matches all).
// Exceptions from a computation become a failing row.
run_report run_claims(std::string command, const std::vector<claim>& claims,
                      const std::string& filter);

// The full built-in claim set: the Dolgachev/rational pair, the
// hyper-elliptic degree-d classes, and the triple-fiber log transform with
// its SW grid, duality, BPS and GW/PT checks.
std::vector<claim> reproduce_claims();

std::string report_text(const run_report& report);
nlohmann::json report_json(const run_report& report);

} // namespace ellsw
