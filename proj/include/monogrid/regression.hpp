#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monogrid/budget.hpp"

namespace monogrid {

enum class CriterionStatus { pass, fail, inconclusive };
std::string to_string(CriterionStatus s);

struct CriterionResult {
    int id = 0;
    std::string title;
    CriterionStatus status = CriterionStatus::fail;
    std::string detail;
    /// Every number the check computed, in a fixed order. Two runs agree
    /// exactly iff their fingerprints are equal.
    std::string fingerprint;
    double elapsed_ms = 0;
};

struct RegressionOptions {
    unsigned threads = 1;
    /// Worker counts compared by the determinism criterion.
    unsigned determinism_low = 1;
    unsigned determinism_high = 8;
    /// Time allowed for the optional uniqueness count on G_4(8).
    std::uint64_t stretch_time_ms = 120000;
    std::uint64_t seed = 20240601;
};

inline constexpr int criterion_count = 13;

/// One criterion, 1 through 12. Criterion 13 needs the others and is only
/// available through run_regression.
CriterionResult run_criterion(int id, const RegressionOptions& options = {});

/// Criteria 1 to 13 in order. `on_result` (if set) sees each result as soon
/// as it is known.
std::vector<CriterionResult> run_regression(const RegressionOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

nlohmann::json to_json(const CriterionResult& r);

} // namespace monogrid
