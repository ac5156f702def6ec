#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lct {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    long checked = 0;         ///< instances examined
    double seconds = 0;
    double limit_seconds = 0;  ///< 0 when the criterion has no time budget
    std::string detail;       ///< first failure, verbatim, or a short summary
};

enum class AcceptanceScope { fast, full };

/// Runs the eight acceptance criteria. Deterministic given the seed apart
/// from the recorded timings.
std::vector<CriterionResult> run_acceptance(AcceptanceScope scope, std::uint64_t seed);

CriterionResult run_criterion(int id, AcceptanceScope scope, std::uint64_t seed);

std::string format_result_line(const CriterionResult& r);

}  // namespace lct
