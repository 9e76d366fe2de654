#pragma once

#include <cstdint>

#include "ntw/nat.hpp"

namespace ntw {

struct WalkConfig {
    std::uint64_t steps = 0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    double start_log = 0.0;  // natural log of the starting magnitude
    /// Probability that a step is odd (multiply by 3/2). The fair-coin model
    /// uses 1/2; 0 and 1 are the degenerate all-even / all-odd walks.
    double p_odd = 0.5;
    unsigned workers = 1;
};

struct WalkSummary {
    std::uint64_t trials = 0;
    std::uint64_t steps = 0;
    double mean_step_drift = 0.0;  // mean over trials of (log change) / steps
    double std_error = 0.0;
    double fraction_descended = 0.0;
};

/// Per-step log drift of the fair-coin model: (1/2) ln(3/2) + (1/2) ln(1/2) = (1/2) ln(3/4).
double expected_step_drift(double p_odd = 0.5);

/// Simulates each trial as a walk in log space: +ln(3/2) with probability
/// p_odd, -ln 2 otherwise. Trial i draws from substream(seed, i).
WalkSummary heuristic_walk(const WalkConfig& config);

struct ParityFrequency {
    std::uint64_t odd = 0;
    std::uint64_t total = 0;
    double fraction = 0.0;
};

/// Pools the parities of the first k iterates of every start in
/// [lo, lo + count). A trajectory that arrives back at 1 after at least one
/// step is cut there (the 1 is counted), so the {1,2} cycle does not bias
/// the result.
ParityFrequency empirical_parity_frequency(const Nat& lo, std::uint64_t count, std::uint64_t k,
                                           unsigned workers = 1);

}  // namespace ntw
