#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fht/root_system.hpp"

namespace fht {

struct CheckResult {
    std::string name;
    std::int64_t cases = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    std::int64_t total_cases() const;
    std::int64_t total_failures() const;
    bool passed() const { return total_failures() == 0; }
};

struct VerifyOptions {
    std::vector<LieType> types; // empty: suite defaults
    std::optional<std::int64_t> k;
    std::uint64_t seed = 0;
    std::int64_t cases = 0; // 0: per-check defaults
    int jobs = 1;
};

// Suite names: rootsystem, lattice_cocycle, affine_weyl, characters,
// verlinde, twisted_group_algebra, fht_map.
const std::vector<std::string>& all_suites();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

} // namespace fht
