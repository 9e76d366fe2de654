#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ntw {

using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

/// A strictly positive natural number of unbounded size.
///
/// Zero is rejected at construction: the Collatz map is only defined on
/// {1, 2, ...}.
class Nat {
public:
    Nat() : value_(1) {}
    explicit Nat(std::uint64_t v);
    explicit Nat(BigInt v);

    /// Parses a decimal string; throws UsageError on junk and DomainError on 0.
    static Nat parse(std::string_view text);

    const BigInt& value() const noexcept { return value_; }
    bool is_odd() const { return bit_test(value_, 0); }
    bool is_one() const { return value_ == 1; }

    std::optional<std::uint64_t> to_u64() const;
    std::optional<u128> to_u128() const;
    std::string str() const { return value_.str(); }

    friend bool operator==(const Nat&, const Nat&) = default;
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    BigInt value_;
};

BigInt to_big(u128 v);
std::string to_string(u128 v);

}  // namespace ntw
