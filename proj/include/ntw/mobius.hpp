#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ntw {

inline constexpr std::uint64_t kDefaultSegment = std::uint64_t{1} << 20;

struct SieveOptions {
    std::uint64_t segment = kDefaultSegment;
    unsigned workers = 1;
};

struct MobiusTable {
    std::uint64_t limit = 0;
    std::vector<std::int8_t> values;  // values[k - 1] == mu(k)

    int mu(std::uint64_t k) const { return values.at(k - 1); }
};

/// Streams mu(first), mu(first + 1), ... to `sink` one segment at a time, in
/// increasing order, covering 1..limit. Segments above the base primes are
/// sieved independently (in parallel when options.workers > 1) and handed to
/// the sink strictly in order. Memory is O(segment * workers + sqrt(limit)).
void for_each_mobius_segment(std::uint64_t limit, const SieveOptions& options,
                             const std::function<void(std::uint64_t first, std::span<const std::int8_t>)>& sink);

/// mu(1..N) by segmented sieve. Throws UsageError for N = 0.
MobiusTable mobius_sieve(std::uint64_t limit, const SieveOptions& options = {});

/// mu(1..N) by a single-array linear sieve. Kept as a cross-check for the
/// segmented sieve.
MobiusTable mobius_sieve_monolithic(std::uint64_t limit);

struct GrowthReport {
    double epsilon = 0.0;
    double sup_statistic = 0.0;  // max over 2 <= n <= N of |M(n)| / n^(1/2 + epsilon)
    std::uint64_t argmax_n = 0;  // 0 when N < 2
};

struct MertensOptions {
    /// Keep M(n) for n = stride, 2*stride, ... (and always n = N).
    std::uint64_t stride = 1;
    /// Growth statistics computed while streaming, for series too large to keep.
    std::vector<double> track_epsilons;
    SieveOptions sieve;
};

struct MertensSeries {
    std::uint64_t limit = 0;
    std::uint64_t stride = 1;
    std::vector<std::int32_t> checkpoints;  // M(checkpoint_n(i))
    std::int64_t final_value = 0;           // M(limit)
    std::int64_t min = 0, max = 0;
    std::uint64_t argmin = 0, argmax = 0;
    std::uint64_t squarefree_count = 0;  // #{n <= limit : mu(n) != 0}
    std::vector<GrowthReport> tracked;

    std::uint64_t checkpoint_n(std::size_t i) const {
        return std::min<std::uint64_t>((i + 1) * stride, limit);
    }
    /// M(n); requires stride == 1 or n to be a checkpoint.
    std::int64_t at(std::uint64_t n) const;
};

MertensSeries mertens(std::uint64_t limit, const MertensOptions& options = {});

/// Exact when the series keeps every n (stride 1); otherwise epsilon must have
/// been tracked when the series was built. Negative epsilon is a usage error.
GrowthReport growth_statistic(const MertensSeries& series, double epsilon);

struct WalkComparison {
    std::uint64_t limit = 0;
    std::uint64_t walk_length = 0;  // squarefree integers <= limit
    std::uint64_t trials = 0;
    double mertens_statistic = 0.0;  // sup_{2<=n<=N} |M(n)| / sqrt(n)
    double walk_statistic_mean = 0.0;
    double walk_statistic_sd = 0.0;
    double percentile_rank = 0.0;  // share of walks whose statistic is <= the Mertens one
    double final_position_mean = 0.0;
    double final_position_std_error = 0.0;
};

/// Compares M against fair +-1 walks with one step per squarefree n <= N.
/// Walk i draws from substream(seed, i).
WalkComparison random_walk_compare(std::uint64_t limit, std::uint64_t trials, std::uint64_t seed,
                                   unsigned workers = 1);

}  // namespace ntw
