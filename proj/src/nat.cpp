#include "ntw/nat.hpp"

#include <algorithm>
#include <cctype>

#include "ntw/error.hpp"

namespace ntw {

Nat::Nat(std::uint64_t v) : value_(v) {
    if (v == 0) throw DomainError("natural numbers start at 1; got 0");
}

Nat::Nat(BigInt v) : value_(std::move(v)) {
    if (value_ <= 0) throw DomainError("natural numbers start at 1; got " + value_.str());
}

Nat Nat::parse(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw UsageError("not a decimal natural number: '" + std::string(text) + "'");
    }
    return Nat(BigInt(std::string(text)));
}

std::optional<std::uint64_t> Nat::to_u64() const {
    if (value_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return static_cast<std::uint64_t>(value_);
}

std::optional<u128> Nat::to_u128() const {
    if (msb(value_) >= 128) return std::nullopt;
    auto lo = static_cast<std::uint64_t>(value_ & std::numeric_limits<std::uint64_t>::max());
    auto hi = static_cast<std::uint64_t>(value_ >> 64);
    return (static_cast<u128>(hi) << 64) | lo;
}

BigInt to_big(u128 v) {
    BigInt r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r |= static_cast<std::uint64_t>(v);
    return r;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace ntw
