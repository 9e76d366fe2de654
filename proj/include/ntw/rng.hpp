#pragma once

#include <cstdint>
#include <random>

namespace ntw {

// SplitMix64 finalizer (Steele, Lea & Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent generator for substream `index` of `seed`.
///
/// Every Monte Carlo routine draws trial i from substream(seed, i) and only
/// consumes raw engine output (never std distributions, whose algorithms are
/// implementation-defined), so results are bit-reproducible across workers,
/// runs and standard libraries.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

inline constexpr const char* kRngIdentity = "mt19937_64 per substream, seeded via splitmix64(seed, index)";

}  // namespace ntw
