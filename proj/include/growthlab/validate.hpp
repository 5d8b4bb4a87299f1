// validate.hpp — fast self-check suite behind the `validate` subcommand.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace growthlab {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Runs the oracle checks (two-stage enumeration vs. weight formulas on small
// random trees, the alpha = 1 degree identity, master-equation residuals and
// known values, diameter double-sweep vs. all-pairs BFS). Deterministic for
// a fixed seed; completes in well under a second.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed);

}  // namespace growthlab
