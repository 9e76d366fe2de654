#pragma once

#include <limits>

#include "ntw/nat.hpp"

namespace ntw::detail {

// A Collatz iterate that lives in an unsigned __int128 until the next odd
// step could overflow, then moves to BigInt until halving brings it back in
// range. Results are identical to pure BigInt iteration.
class Cursor {
public:
    explicit Cursor(const Nat& n) {
        if (auto v = n.to_u128()) {
            small_ = *v;
        } else {
            wide_ = true;
            big_ = n.value();
        }
    }
    explicit Cursor(u128 v) : small_(v) {}

    bool odd() const { return wide_ ? bit_test(big_, 0) : (small_ & 1) != 0; }
    bool is_one() const { return !wide_ && small_ == 1; }
    bool wide() const { return wide_; }
    u128 small() const { return small_; }

    void advance() {
        if (!wide_) {
            if ((small_ & 1) == 0) {
                small_ >>= 1;
                return;
            }
            if (small_ <= kOddLimit) {
                small_ += (small_ >> 1) + 1;
                return;
            }
            wide_ = true;
            big_ = to_big(small_);
        }
        if (bit_test(big_, 0)) {
            big_ = (3 * big_ + 1) >> 1;
        } else {
            big_ >>= 1;
            demote();
        }
    }

    // Adds a multiple of the current slope; used by the 2-adic lifting.
    void add(const BigInt& delta) {
        if (!wide_) {
            wide_ = true;
            big_ = to_big(small_);
        }
        big_ += delta;
        demote();
    }

    bool less_than(const BigInt& bound) const { return wide_ ? big_ < bound : to_big(small_) < bound; }
    bool greater_than(const BigInt& other) const { return wide_ ? big_ > other : to_big(small_) > other; }

    BigInt big() const { return wide_ ? big_ : to_big(small_); }
    Nat nat() const { return Nat(big()); }

private:
    void demote() {
        if (msb(big_) < 128) {
            const auto lo = static_cast<std::uint64_t>(big_ & std::numeric_limits<std::uint64_t>::max());
            const auto hi = static_cast<std::uint64_t>(big_ >> 64);
            small_ = (static_cast<u128>(hi) << 64) | lo;
            wide_ = false;
        }
    }

    static constexpr u128 kOddLimit = std::numeric_limits<u128>::max() / 3;
    u128 small_ = 1;
    BigInt big_;
    bool wide_ = false;
};

}  // namespace ntw::detail
