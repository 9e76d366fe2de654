#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ntw/parity.hpp"

namespace ntw {

namespace {

constexpr std::size_t kMinMatch = 16;
constexpr int kChainDepth = 64;
constexpr std::int32_t kNone = -1;

std::uint64_t gamma_bits(std::uint64_t v) { return 2 * static_cast<std::uint64_t>(std::bit_width(v) - 1) + 1; }

// Bits needed for a distance in [1, pos].
std::uint64_t distance_bits(std::uint64_t pos) { return pos <= 1 ? 0 : std::bit_width(pos - 1); }

std::uint64_t match_cost(std::size_t pos, std::size_t len) {
    return 1 + distance_bits(pos) + gamma_bits(len - kMinMatch + 1);
}

std::uint64_t literal_cost(std::size_t len) { return len == 0 ? 0 : 1 + gamma_bits(len) + len; }

class MatchFinder {
public:
    explicit MatchFinder(const std::vector<std::uint8_t>& bits)
        : bits_(bits), head_(std::size_t{1} << kMinMatch, kNone), prev_(bits.size(), kNone) {}

    void insert(std::size_t pos) {
        if (pos + kMinMatch > bits_.size()) return;
        auto key = window(pos);
        prev_[pos] = head_[key];
        head_[key] = static_cast<std::int32_t>(pos);
    }

    struct Match {
        std::size_t distance = 0;
        std::size_t length = 0;
    };

    Match longest(std::size_t pos) const {
        Match best;
        if (pos == 0 || pos + kMinMatch > bits_.size()) return best;
        const std::size_t limit = bits_.size() - pos;
        std::int32_t cand = head_[window(pos)];
        for (int depth = 0; cand != kNone && depth < kChainDepth; ++depth, cand = prev_[cand]) {
            const auto j = static_cast<std::size_t>(cand);
            std::size_t len = 0;
            while (len < limit && bits_[j + len] == bits_[pos + len]) ++len;
            if (len > best.length) best = {pos - j, len};
            if (len == limit) break;
        }
        return best;
    }

private:
    std::uint32_t window(std::size_t pos) const {
        std::uint32_t key = 0;
        for (std::size_t i = 0; i < kMinMatch; ++i) key = (key << 1) | bits_[pos + i];
        return key;
    }

    const std::vector<std::uint8_t>& bits_;
    std::vector<std::int32_t> head_;
    std::vector<std::int32_t> prev_;
};

}  // namespace

std::uint64_t estimator_overhead(std::size_t k) {
    return gamma_bits(k + 1) + (k == 0 ? 0 : 1 + gamma_bits(k));
}

CompressibilityScore description_length_estimate(const ParityVector& x) {
    const auto& bits = x.bits();
    const std::size_t k = bits.size();

    std::uint64_t total = gamma_bits(k + 1);
    std::size_t pending_literals = 0;
    MatchFinder finder(bits);
    std::size_t pos = 0;
    while (pos < k) {
        auto m = finder.longest(pos);
        if (m.length >= kMinMatch && match_cost(pos, m.length) < m.length) {
            total += literal_cost(pending_literals) + match_cost(pos, m.length);
            pending_literals = 0;
            for (std::size_t i = 0; i < m.length; ++i) finder.insert(pos + i);
            pos += m.length;
        } else {
            finder.insert(pos);
            ++pending_literals;
            ++pos;
        }
    }
    total += literal_cost(pending_literals);
    // A single literal run is also a valid parse.
    total = std::min(total, gamma_bits(k + 1) + literal_cost(k));

    CompressibilityScore score;
    score.length = k;
    score.estimate = total;
    score.deficiency = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(total);
    score.overhead = estimator_overhead(k);
    return score;
}

}  // namespace ntw
