#pragma once

#include "verify.hpp"

#include <cstdint>
#include <string>

namespace cw {

/// One bag of knobs for every campaign; each command reads the subset it
/// documents and ignores the rest.
struct RunConfig {
    std::uint64_t seed = 42;
    int samples = 10;
    int trunc = 100;
    std::string domain = "interval:1";
    double s = 0.5;
    double t_final = 1.0;
    int grid = 256;
    double extent = 6.0;
    double alpha = 0.1;
    double k_sigma = 4.0;
    double fk_sign = -1.0;
    std::string format = "csv";  // csv | json
    int quick_scale = 1;
};

struct CampaignOutput {
    std::string body;     // CSV or JSON, per config.format
    std::string summary;  // always JSON: config echo plus headline numbers
};

/// Brownian paths on the uniform grid 0..T with `grid` steps.
CampaignOutput run_sample_bm(const RunConfig& config);

/// Fractional Gaussian field coefficient samples.
CampaignOutput run_sample_fgf(const RunConfig& config);

/// Trotter / spectral-exponential / path-MC three-way comparison report
/// (always JSON).
CampaignOutput run_fk_compare(const RunConfig& config);

/// Fernique exponential-moment estimate with a grid-doubling stability
/// check (always JSON).
CampaignOutput run_fernique(const RunConfig& config);

struct VerifyOutput {
    std::string report;  // JSON
    bool all_pass = false;
};

VerifyOutput run_verify_campaign(const RunConfig& config);

} // namespace cw
