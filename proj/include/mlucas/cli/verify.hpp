#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <mlucas/sequences.hpp>

namespace mlucas::cli
{

struct VerifyOptions {
    std::int64_t max_n = 500;      // number-family checks cover 0..max_n
    std::int64_t max_poly_n = 40;  // polynomial-family checks cover 0..max_poly_n
    std::uint64_t seed = 0;        // drives only the random-alphabet checks
    seq::Seeds seeds{};            // recurrence seeds; overridden for fault injection
};

struct CheckResult {
    std::string name;
    std::string range;
    bool passed = true;
    std::string detail; // first counterexample, empty on success
};

struct VerifyReport {
    std::vector<CheckResult> checks; // sorted by name
    bool overall = true;
};

struct NamedCheck {
    std::string_view name;
    std::function<CheckResult(const VerifyOptions &)> run;
};

// Every check the verify command runs, in name order.
const std::vector<NamedCheck> &all_checks();

// Runs a single check by name. Throws std::invalid_argument for unknown names.
CheckResult run_check(std::string_view name, const VerifyOptions &opts);

// Runs every check (concurrently) and assembles a deterministic report.
// Throws std::invalid_argument when max_n < 6 or max_poly_n < 1.
VerifyReport run_verify(const VerifyOptions &opts);

// Fault injection: returns seeds with one value bumped by 1.
// which is one of "m1", "gm0", "gm1"; throws std::invalid_argument otherwise.
seq::Seeds perturbed_seeds(std::string_view which);

} // namespace mlucas::cli
