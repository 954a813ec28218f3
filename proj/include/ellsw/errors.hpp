#pragma once

#include <stdexcept>
#include <string>

namespace ellsw {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad surface documents, bad flags, failed validation of
// user-supplied data. The CLI maps these to exit code 2.
struct schema_error : error {
    using error::error;
};

// An operation was called outside its stated domain (wrong group, class not
// satisfying the required pairings, ...). Also exit code 2 at the CLI.
struct precondition_error : error {
    using error::error;
};

// A consistency check that should be unreachable failed.
struct internal_error : error {
    using error::error;
};

} // namespace ellsw
