#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cw {

struct VerifyConfig {
    std::uint64_t seed = 42;
    double k_sigma = 4.0;
    /// Divides the Monte-Carlo sample counts; 1 is the full acceptance
    /// budget, larger values give a fast smoke run.
    int scale = 1;
    double fk_sign = -1.0;
    /// Internal: quick re-runs used by the determinism criterion skip
    /// the determinism criterion itself.
    bool include_determinism = true;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    nlohmann::json details;  // both sides of every comparison plus tolerances
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<CriterionResult> criteria;
    bool all_pass = false;

    nlohmann::json to_json() const;
};

/// Runs the full verification suite (the acceptance gate).
VerifyReport run_verify(const VerifyConfig& config);

} // namespace cw
