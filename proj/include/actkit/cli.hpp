#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "actkit/monoid.hpp"

namespace actkit {

// One resolved invocation. `command` is validate, classify, star, morita,
// cellular, universe, or selftest; `inputs` are file paths; `property`
// narrows the run to one named property when set.
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    Index bound = 3;
    std::string output_format = "text";  // text | machine
    std::uint64_t seed = 0;
    std::string property;
};

// Executes the invocation and returns the process exit code: 0 on
// success, 1 when a queried property comes back false or Certified-No
// (with its witness printed), 2 on parse or validation errors, 3 when an
// internal cross-check fails. Never throws.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace actkit
