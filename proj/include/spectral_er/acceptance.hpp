#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace ser {

struct AcceptanceConfig {
    double tol = 1e-10;
    int workers = 0;         // 0 = available parallelism
    int spectral_er_nmax = 9;  // criterion 1 sweep cap (up to 10)
    unsigned seed = 0x5eed;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;        // one-line summary shown next to PASS/FAIL
    nlohmann::json artifact;   // full machine-readable evidence
};

// Run acceptance criterion k (1..11).
CriterionResult run_criterion(int k, const AcceptanceConfig& config);

// Run all criteria in order; `progress` (optional) sees each result as it lands.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceConfig& config,
    const std::function<void(const CriterionResult&)>& progress = nullptr);

}  // namespace ser
