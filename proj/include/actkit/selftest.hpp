#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "actkit/monoid.hpp"

namespace actkit {

// Knobs for the self-check sweeps. `bound` is the act-size cap for the
// main universes; the indecomposability sweep runs one size higher and the
// catalog, unit-consistency, and oracle-coherence sweeps one size lower,
// so the default of 3 reproduces the documented gate exactly.
struct SelftestOptions {
    Index bound = 3;
    Index monoid_order_max = 3;
    std::uint64_t seed = 0;
};

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    long long checked = 0;  // instances examined
    std::string detail;     // first failure, or a note
};

struct SelftestReport {
    SelftestOptions options;
    std::vector<CriterionResult> criteria;
    // Law name -> number of instances that passed it, sorted by name.
    std::vector<std::pair<std::string, long long>> theorem_passes;
    bool all_pass = false;
};

SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace actkit
