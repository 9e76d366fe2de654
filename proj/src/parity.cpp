#include "ntw/parity.hpp"

#include <algorithm>

#include "ntw/detail/cursor.hpp"
#include "ntw/error.hpp"
#include "ntw/parallel.hpp"
#include "ntw/rng.hpp"

namespace ntw {

ParityVector::ParityVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) {
        if (b > 1) throw UsageError("parity vector entries must be 0 or 1");
    }
}

ParityVector ParityVector::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw UsageError("parity vector must contain only '0' and '1'");
        }
        bits.push_back(c == '1' ? 1 : 0);
    }
    return ParityVector(std::move(bits));
}

std::string ParityVector::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) s[i] = '1';
    }
    return s;
}

ParityVector concat(const ParityVector& a, const ParityVector& b) {
    ParityVector out = a;
    out.bits_.insert(out.bits_.end(), b.bits_.begin(), b.bits_.end());
    return out;
}

ParityVector parity_vector(const Nat& n, std::size_t k) {
    std::vector<std::uint8_t> bits(k);
    detail::Cursor c(n);
    for (std::size_t i = 0; i < k; ++i) {
        bits[i] = c.odd() ? 1 : 0;
        if (i + 1 < k) c.advance();
    }
    return ParityVector(std::move(bits));
}

Realization realize(const ParityVector& x) {
    const std::size_t k = x.size();
    const BigInt modulus = BigInt(1) << k;

    // Invariant before round i: iterate == T^i(candidate), and moving the
    // candidate by m * 2^i moves the iterate by m * slope (slope = 3^odd_count).
    BigInt candidate = modulus;
    BigInt iterate = candidate;
    BigInt slope = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (bit_test(iterate, 0) != x[i]) {
            bit_set(candidate, static_cast<unsigned>(i));
            iterate += slope;
        }
        if (bit_test(iterate, 0)) {
            iterate = (3 * iterate + 1) >> 1;
            slope *= 3;
        } else {
            iterate >>= 1;
        }
    }
    BigInt residue = candidate % modulus;
    if (residue == 0) residue = modulus;
    return Realization{k, Nat(residue), Nat(residue)};
}

bool bijection_check(std::size_t k, std::size_t cap) {
    cap = std::min<std::size_t>(cap, 32);
    if (k > cap) {
        throw UsageError("bijection_check: k = " + std::to_string(k) + " exceeds the enumeration cap " +
                         std::to_string(cap));
    }
    const std::uint64_t count = std::uint64_t{1} << k;
    std::vector<bool> seen(count, false);
    for (std::uint64_t n = 1; n <= count; ++n) {
        // 2^32 * (3/2)^32 < 2^51, so 64 bits are enough for every iterate.
        std::uint64_t x = n, mask = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (x & 1) {
                mask |= std::uint64_t{1} << i;
                x += (x >> 1) + 1;
            } else {
                x >>= 1;
            }
        }
        if (seen[mask]) return false;
        seen[mask] = true;
    }
    // count distinct images out of count possible vectors: onto as well.
    return true;
}

ParityVector random_vector(std::size_t k, std::uint64_t seed, std::uint64_t index) {
    auto rng = substream(seed, index);
    std::vector<std::uint8_t> bits(k);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (i % 64 == 0) word = rng();
        bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1);
    }
    return ParityVector(std::move(bits));
}

FractionReport random_fraction(std::size_t k, std::uint64_t samples, std::uint64_t seed,
                               std::optional<std::int64_t> threshold, unsigned workers) {
    if (samples == 0) throw UsageError("random_fraction: samples must be at least 1");
    FractionReport report;
    report.k = k;
    report.samples = samples;
    report.threshold = threshold.value_or(static_cast<std::int64_t>(estimator_overhead(k)));

    std::vector<std::uint8_t> is_random(samples, 0);
    parallel_for(samples, workers, [&](std::size_t i) {
        auto score = description_length_estimate(random_vector(k, seed, i));
        is_random[i] = score.deficiency < report.threshold ? 1 : 0;
    });
    report.random_count = static_cast<std::uint64_t>(std::count(is_random.begin(), is_random.end(), 1));
    report.fraction = static_cast<double>(report.random_count) / static_cast<double>(samples);
    return report;
}

}  // namespace ntw
