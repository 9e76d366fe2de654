#include "ntw/collatz.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "ntw/detail/cursor.hpp"
#include "ntw/error.hpp"
#include "ntw/parallel.hpp"

namespace ntw {

using detail::Cursor;

Nat step(const Nat& n) {
    Cursor c(n);
    c.advance();
    return c.nat();
}

Nat iterate(const Nat& n, std::uint64_t k) {
    Cursor c(n);
    for (std::uint64_t i = 0; i < k; ++i) c.advance();
    return c.nat();
}

Trajectory trajectory(const Nat& n, std::uint64_t max_steps) {
    Trajectory t{n, {n}, {n.is_odd()}, false};
    Cursor c(n);
    std::uint64_t steps = 0;
    while (!c.is_one()) {
        if (steps == max_steps) {
            t.truncated = true;
            break;
        }
        c.advance();
        ++steps;
        t.iterates.push_back(c.nat());
        t.parities.push_back(c.odd());
    }
    return t;
}

namespace {

// Running maximum that stays in u128 until the cursor goes wide.
class Peak {
public:
    explicit Peak(const Cursor& c) { observe(c); }
    void observe(const Cursor& c) {
        if (!c.wide() && !wide_) {
            small_ = std::max(small_, c.small());
            return;
        }
        if (!wide_) {
            wide_ = true;
            big_ = to_big(small_);
        }
        if (c.greater_than(big_)) big_ = c.big();
    }
    Nat nat() const { return Nat(wide_ ? big_ : to_big(small_)); }

private:
    u128 small_ = 0;
    BigInt big_;
    bool wide_ = false;
};

}  // namespace

std::optional<StoppingRecord> total_stopping_time(const Nat& n, std::uint64_t budget) {
    Cursor c(n);
    Peak peak(c);
    std::uint64_t steps = 0;
    while (!c.is_one()) {
        if (steps == budget) return std::nullopt;
        c.advance();
        ++steps;
        peak.observe(c);
    }
    return StoppingRecord{n, steps, peak.nat()};
}

namespace {

struct StartOutcome {
    bool verified;
    std::uint64_t steps;
};

// Stop condition shared by both paths: arrival at 1, or strictly below the floor.
struct Stop {
    // floor_small == 0 means "no floor"; floor_above_u64 means every u64 value is below it.
    std::uint64_t floor_small = 0;
    bool floor_above_u64 = false;
    std::optional<BigInt> floor_big;

    bool at(const Cursor& c) const {
        if (c.is_one()) return true;
        if (!floor_big) return false;
        return c.less_than(*floor_big);
    }
};

// Generic path: any start, any size.
StartOutcome run_wide(Cursor c, std::uint64_t steps, std::uint64_t budget, const Stop& stop,
                      Cursor* last) {
    while (!stop.at(c)) {
        if (steps == budget) {
            if (last) *last = c;
            return {false, steps};
        }
        c.advance();
        ++steps;
    }
    return {true, steps};
}

// Hot path for starts that fit in 64 bits; hands over to the generic path
// once an odd step could overflow.
StartOutcome run_u64(std::uint64_t n, std::uint64_t budget, const Stop& stop, Cursor* last) {
    constexpr std::uint64_t kOddLimit = std::numeric_limits<std::uint64_t>::max() / 3;
    if (stop.floor_above_u64) return {true, 0};
    const std::uint64_t floor = stop.floor_small;
    std::uint64_t x = n;
    std::uint64_t steps = 0;
    while (x != 1 && x >= floor) {
        if (steps == budget) {
            if (last) *last = Cursor(static_cast<u128>(x));
            return {false, steps};
        }
        if ((x & 1) == 0) {
            x >>= 1;
        } else if (x <= kOddLimit) {
            x += (x >> 1) + 1;
        } else {
            return run_wide(Cursor(static_cast<u128>(x)), steps, budget, stop, last);
        }
        ++steps;
    }
    return {true, steps};
}

struct ChunkResult {
    std::uint64_t verified = 0;
    std::uint64_t max_steps = 0;
    std::vector<Candidate> candidates;
};

}  // namespace

VerificationReport verify_range(const Nat& lo, const Nat& hi, const VerifyOptions& options) {
    if (hi < lo) throw UsageError("empty range: hi (" + hi.str() + ") < lo (" + lo.str() + ")");
    if (options.budget == 0) throw UsageError("budget must be at least 1");
    const BigInt span = hi.value() - lo.value() + 1;
    if (span > std::numeric_limits<std::uint64_t>::max()) {
        throw UsageError("range too large: more than 2^64-1 starts");
    }
    const auto size = static_cast<std::uint64_t>(span);

    Stop stop;
    if (options.floor) {
        stop.floor_big = options.floor->value();
        if (auto f = options.floor->to_u64()) {
            stop.floor_small = *f;
        } else {
            stop.floor_above_u64 = true;
        }
    }

    std::uint64_t chunks = options.chunks;
    if (chunks == 0) chunks = (size + kDefaultChunkSize - 1) / kDefaultChunkSize;
    chunks = std::clamp<std::uint64_t>(chunks, 1, size);

    auto chunk_begin = [&](std::uint64_t c) {
        return static_cast<std::uint64_t>(static_cast<u128>(size) * c / chunks);
    };

    const auto lo_small = lo.to_u64();
    const auto hi_small = hi.to_u64();
    const bool fast = lo_small && hi_small;

    auto t0 = std::chrono::steady_clock::now();
    std::vector<ChunkResult> results(chunks);
    parallel_for(chunks, options.workers, [&](std::size_t c) {
        ChunkResult& r = results[c];
        const std::uint64_t begin = chunk_begin(c), end = chunk_begin(c + 1);
        for (std::uint64_t off = begin; off < end; ++off) {
            Cursor last(u128{1});
            StartOutcome o;
            Nat n;
            if (fast) {
                o = run_u64(*lo_small + off, options.budget, stop, &last);
            } else {
                n = Nat(lo.value() + off);
                o = run_wide(Cursor(n), 0, options.budget, stop, &last);
            }
            if (o.verified) {
                ++r.verified;
                r.max_steps = std::max(r.max_steps, o.steps);
            } else {
                if (fast) n = Nat(*lo_small + off);
                r.candidates.push_back({n, options.budget, o.steps, last.nat()});
            }
        }
    });

    VerificationReport report;
    report.lo = lo;
    report.hi = hi;
    report.budget = options.budget;
    report.floor = options.floor;
    report.chunk_count = chunks;
    for (auto& r : results) {
        report.verified_count += r.verified;
        report.max_stopping_time_seen = std::max(report.max_stopping_time_seen, r.max_steps);
        for (auto& cand : r.candidates) report.counterexample_candidates.push_back(std::move(cand));
    }
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

bool same_outcome(const VerificationReport& a, const VerificationReport& b) {
    return a.lo == b.lo && a.hi == b.hi && a.budget == b.budget && a.floor == b.floor &&
           a.verified_count == b.verified_count &&
           a.counterexample_candidates == b.counterexample_candidates &&
           a.max_stopping_time_seen == b.max_stopping_time_seen;
}

}  // namespace ntw
