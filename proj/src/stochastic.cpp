#include "ntw/stochastic.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ntw/detail/cursor.hpp"
#include "ntw/error.hpp"
#include "ntw/parallel.hpp"
#include "ntw/rng.hpp"

namespace ntw {

namespace {

const double kUp = std::log(1.5);
const double kDown = -std::log(2.0);

// Raw draws below this are odd steps. p = 1 is handled separately since
// 2^64 does not fit.
std::uint64_t odd_threshold(double p) {
    return static_cast<std::uint64_t>(std::ldexp(p, 64));
}

}  // namespace

double expected_step_drift(double p_odd) { return p_odd * kUp + (1.0 - p_odd) * kDown; }

WalkSummary heuristic_walk(const WalkConfig& config) {
    if (config.trials == 0) throw UsageError("heuristic_walk: trials must be at least 1");
    if (!(config.p_odd >= 0.0 && config.p_odd <= 1.0)) {
        throw UsageError("heuristic_walk: p_odd must lie in [0, 1]");
    }
    WalkSummary summary;
    summary.trials = config.trials;
    summary.steps = config.steps;
    if (config.steps == 0) return summary;

    const bool always_odd = config.p_odd >= 1.0;
    const std::uint64_t threshold = always_odd ? 0 : odd_threshold(config.p_odd);

    std::vector<std::uint64_t> odd_counts(config.trials);
    parallel_for(config.trials, config.workers, [&](std::size_t trial) {
        auto rng = substream(config.seed, trial);
        std::uint64_t odd = 0;
        if (always_odd) {
            odd = config.steps;
        } else {
            for (std::uint64_t s = 0; s < config.steps; ++s) odd += rng() < threshold ? 1 : 0;
        }
        odd_counts[trial] = odd;
    });

    // drift_j = kDown + (odd_j / steps) * (kUp - kDown), so the mean and
    // variance follow from integer sums of the odd counts.
    const double steps = static_cast<double>(config.steps);
    const double n = static_cast<double>(config.trials);
    u128 sum = 0, sum_sq = 0;
    std::uint64_t descended = 0;
    for (std::uint64_t odd : odd_counts) {
        sum += odd;
        sum_sq += static_cast<u128>(odd) * odd;
        const double change = static_cast<double>(odd) * kUp + static_cast<double>(config.steps - odd) * kDown;
        if (change < 0) ++descended;
    }
    const u128 all_steps = static_cast<u128>(config.steps) * config.trials;
    const double odd_share = static_cast<double>(sum) / static_cast<double>(all_steps);
    const double even_share = static_cast<double>(all_steps - sum) / static_cast<double>(all_steps);
    summary.mean_step_drift = odd_share * kUp + even_share * kDown;
    if (config.trials > 1) {
        // Exact in 128 bits while trials * steps < 2^64.
        const double spread = static_cast<double>(static_cast<u128>(config.trials) * sum_sq - sum * sum);
        const double var_odd = spread / (n * (n - 1));
        const double scale = (kUp - kDown) / steps;
        summary.std_error = scale * std::sqrt(var_odd / n);
    }
    summary.fraction_descended = static_cast<double>(descended) / n;
    return summary;
}

ParityFrequency empirical_parity_frequency(const Nat& lo, std::uint64_t count, std::uint64_t k,
                                           unsigned workers) {
    if (count == 0) throw UsageError("empirical_parity_frequency: count must be at least 1");
    if (k == 0) throw UsageError("empirical_parity_frequency: k must be at least 1");

    constexpr std::uint64_t kBlock = 1024;
    const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
    std::vector<ParityFrequency> partial(blocks);
    parallel_for(blocks, workers, [&](std::size_t b) {
        ParityFrequency& f = partial[b];
        const std::uint64_t end = std::min(count, (b + 1) * kBlock);
        for (std::uint64_t off = b * kBlock; off < end; ++off) {
            detail::Cursor c(Nat(lo.value() + off));
            for (std::uint64_t i = 0; i < k; ++i) {
                f.odd += c.odd() ? 1 : 0;
                ++f.total;
                if (i > 0 && c.is_one()) break;
                c.advance();
            }
        }
    });

    ParityFrequency out;
    for (const auto& f : partial) {
        out.odd += f.odd;
        out.total += f.total;
    }
    out.fraction = static_cast<double>(out.odd) / static_cast<double>(out.total);
    return out;
}

}  // namespace ntw
