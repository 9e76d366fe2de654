#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ntw/nat.hpp"

namespace ntw {

/// Bit vector of trajectory parities. Serialized as an ASCII string of '0'
/// and '1', leftmost character = parity of the start value.
class ParityVector {
public:
    ParityVector() = default;
    explicit ParityVector(std::vector<std::uint8_t> bits);

    static ParityVector parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    void push_back(bool b) { bits_.push_back(b ? 1 : 0); }
    std::string str() const;

    friend ParityVector concat(const ParityVector& a, const ParityVector& b);
    friend bool operator==(const ParityVector&, const ParityVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Parities of n, T(n), ..., T^(k-1)(n).
ParityVector parity_vector(const Nat& n, std::size_t k);

struct Realization {
    std::size_t k = 0;
    Nat residue;  // class mod 2^k, with 0 written as 2^k
    Nat witness;  // smallest positive n whose first k parities are the input
};

/// Finds the unique residue class mod 2^k whose trajectories start with the
/// parities `x`, by lifting one bit at a time: adding 2^i to a candidate
/// leaves the first i parities alone and flips the i-th.
Realization realize(const ParityVector& x);

inline constexpr std::size_t kBijectionCap = 24;

/// Exhaustively checks that n -> parity_vector(n, k) maps {1..2^k} onto {0,1}^k.
/// Throws UsageError when k exceeds `cap` (never more than 32).
bool bijection_check(std::size_t k, std::size_t cap = kBijectionCap);

// ---------------------------------------------------------------------------
// Description length proxy.
//
// The estimate is the exact length, in bits, of a self-delimiting LZ77-style
// code for the vector:
//
//   header       gamma(k + 1)
//   literal run  '0'  gamma(len)  <len raw bits>
//   match        '1'  distance in ceil(log2(pos)) bits  gamma(len - 15)
//
// gamma is the Elias gamma code (2*floor(log2 v) + 1 bits). Matches are at
// least 16 bits long, may overlap the current position, and are chosen
// greedily (longest among the 64 most recent positions sharing the next
// 16 bits); a match is taken only when it costs fewer bits than it covers.
// Since the whole vector can always be sent as one literal run,
//
//   estimate <= k + overhead(k),  overhead(k) = gamma(k+1) + 1 + gamma(k)
//
// and doubling a vector costs at most one extra match:
//
//   estimate(x ++ x) <= 2 * estimate(x) + kDoublingSlack.
//
// This is a computable upper-bound proxy. It is not Kolmogorov complexity.
// ---------------------------------------------------------------------------

inline constexpr std::string_view kEstimatorIdentity =
    "lz77-greedy/v1 (gamma header, literal runs, min match 16, chain depth 64)";
inline constexpr std::int64_t kDoublingSlack = 64;

struct CompressibilityScore {
    std::size_t length = 0;
    std::uint64_t estimate = 0;
    std::int64_t deficiency = 0;  // length - estimate
    std::uint64_t overhead = 0;   // fixed cost of sending the vector verbatim
    std::string_view estimator = kEstimatorIdentity;
};

std::uint64_t estimator_overhead(std::size_t k);

CompressibilityScore description_length_estimate(const ParityVector& x);

struct FractionReport {
    std::size_t k = 0;
    std::uint64_t samples = 0;
    std::int64_t threshold = 0;
    std::uint64_t random_count = 0;
    double fraction = 0.0;
};

/// Fraction of `samples` uniform vectors in {0,1}^k whose deficiency is
/// strictly below `threshold` (default: estimator_overhead(k), i.e. the
/// estimator saved nothing beyond its own fixed cost). Sample i is drawn from
/// substream(seed, i), so the result does not depend on `workers`.
FractionReport random_fraction(std::size_t k, std::uint64_t samples, std::uint64_t seed,
                               std::optional<std::int64_t> threshold = std::nullopt,
                               unsigned workers = 1);

/// k uniform bits from substream(seed, index).
ParityVector random_vector(std::size_t k, std::uint64_t seed, std::uint64_t index);

}  // namespace ntw
