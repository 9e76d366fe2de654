#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ntw/nat.hpp"

namespace ntw {

/// The accelerated Collatz map: (3n+1)/2 for odd n, n/2 for even n.
Nat step(const Nat& n);

/// T applied k times. iterate(n, 0) == n.
Nat iterate(const Nat& n, std::uint64_t k);

struct Trajectory {
    Nat start;
    std::vector<Nat> iterates;   // iterates[0] == start
    std::vector<bool> parities;  // parities[i] == iterates[i] mod 2
    bool truncated = false;      // max_steps reached before arriving at 1
};

/// Records iterates until 1 is reached or max_steps applications were made.
Trajectory trajectory(const Nat& n, std::uint64_t max_steps);

struct StoppingRecord {
    Nat n;
    std::uint64_t total_stopping_time = 0;
    Nat max_excursion;
};

/// Least k with T^k(n) == 1 together with the largest iterate seen, or
/// nullopt if `budget` applications were not enough.
std::optional<StoppingRecord> total_stopping_time(const Nat& n, std::uint64_t budget);

struct Candidate {
    Nat n;
    std::uint64_t budget = 0;
    std::uint64_t steps_taken = 0;
    Nat last_iterate;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct VerifyOptions {
    std::uint64_t budget = 100000;
    /// Convergence is taken as known below this bound; a trajectory stops as
    /// soon as it falls strictly below it. nullopt runs every start to 1.
    std::optional<Nat> floor;
    /// Number of contiguous subranges; 0 picks ceil(size / kDefaultChunkSize).
    std::uint64_t chunks = 0;
    unsigned workers = 1;
};

inline constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 18;

struct VerificationReport {
    Nat lo, hi;
    std::uint64_t budget = 0;
    std::optional<Nat> floor;
    std::uint64_t verified_count = 0;
    std::vector<Candidate> counterexample_candidates;
    /// Largest number of steps any verified start needed (to 1, or to the floor).
    std::uint64_t max_stopping_time_seen = 0;
    double wall_time = 0.0;
    std::uint64_t chunk_count = 0;
};

/// Checks every start in [lo, hi]. Starts that exhaust the budget are listed
/// as candidates, never dropped. The outcome fields are identical for any
/// chunk and worker count; only wall_time and chunk_count describe the run.
VerificationReport verify_range(const Nat& lo, const Nat& hi, const VerifyOptions& options);

/// True when two reports agree on everything except run metadata.
bool same_outcome(const VerificationReport& a, const VerificationReport& b);

}  // namespace ntw
