#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace escode {

struct VerifyOptions {
    long trials = 10000;
    std::uint64_t seed = 42;
    std::size_t n_min = 2;
    std::size_t n_max = 12;
    std::vector<double> q_grid = {0.0, 0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 5.0};
    unsigned base = 2;
    double tolerance = 1e-9;
};

struct InequalityTally {
    std::string name;
    long checked = 0;      // applicable evaluations
    long violations = 0;
    double worst_slack;    // minimum slack seen; +inf when never applicable
};

struct VerifySummary {
    std::vector<InequalityTally> tallies;
    long trials = 0;
    bool all_satisfied() const;
};

/// Randomized theorem suite: per trial draws a random distribution
/// (N in [n_min, n_max]) and random Kraft-feasible integer lengths, then
/// runs verify_bounds over the whole q grid and tallies each inequality.
/// Deterministic for a given seed regardless of trial order.
VerifySummary run_verification(const VerifyOptions& opts);

} // namespace escode
