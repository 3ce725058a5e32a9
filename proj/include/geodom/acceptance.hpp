#pragma once

// The twelve acceptance criteria as one deterministic, seeded suite.

#include <cstdint>
#include <string>
#include <vector>

namespace geodom::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // deterministic for a fixed seed
    double seconds = 0;  // wall time, kept out of the deterministic payload
};

struct Report {
    std::uint64_t seed = kDefaultSeed;
    std::vector<CriterionResult> results;

    bool all_pass() const;
    /// One "PASS|FAIL <id> <name>: <detail>" line per criterion, no timings.
    std::string payload() const;
};

/// Runs criteria 1..11. Criterion 12 (determinism) needs two runs; see run_all.
Report run_suite(std::uint64_t seed);
/// Runs the suite twice and appends criterion 12, comparing both payloads.
Report run_all(std::uint64_t seed);

}  // namespace geodom::acceptance
