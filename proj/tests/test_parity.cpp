#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ntw/error.hpp"
#include "ntw/parity.hpp"
#include "oracles.hpp"

using namespace ntw;

namespace {

ParityVector from(std::initializer_list<int> bits) {
    std::vector<std::uint8_t> v;
    for (int b : bits) v.push_back(static_cast<std::uint8_t>(b));
    return ParityVector(v);
}

ParityVector alternating(std::size_t k) {
    ParityVector v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(i % 2 == 1);
    return v;
}

// Smallest n in 1..2^k with the given leading parities, by enumeration.
std::uint64_t brute_force_witness(const ParityVector& x) {
    const std::uint64_t count = std::uint64_t{1} << x.size();
    for (std::uint64_t n = 1; n <= count; ++n) {
        auto p = oracle::parities(n, x.size());
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i) ok = (p[i] == int(x[i]));
        if (ok) return n;
    }
    return 0;
}

}  // namespace

TEST_CASE("parity_vector examples") {
    CHECK(parity_vector(Nat(1), 2) == from({1, 0}));
    CHECK(parity_vector(Nat(4), 2) == from({0, 0}));
    CHECK(parity_vector(Nat(7), 3) == from({1, 1, 1}));
    CHECK(parity_vector(Nat(7), 0).empty());
    CHECK(parity_vector(Nat(7), 3).str() == "111");
}

TEST_CASE("parse rejects non-binary text") {
    CHECK(ParityVector::parse("0110") == from({0, 1, 1, 0}));
    CHECK(ParityVector::parse("").empty());
    CHECK_THROWS_AS(ParityVector::parse("01a"), UsageError);
}

TEST_CASE("realize examples") {
    auto one = realize(from({1}));
    CHECK(one.witness == Nat(1));
    auto zero = realize(from({0}));
    CHECK(zero.witness == Nat(2));
    CHECK(zero.residue == Nat(2));
    auto sevens = realize(from({1, 1, 1}));
    CHECK(sevens.k == 3);
    CHECK(sevens.residue == Nat(7));
    CHECK(sevens.witness == Nat(7));
    auto empty = realize(ParityVector{});
    CHECK(empty.k == 0);
    CHECK(empty.witness == Nat(1));
    CHECK(empty.residue == Nat(1));
}

TEST_CASE("realize matches brute force for every vector up to k = 10") {
    for (std::size_t k = 1; k <= 10; ++k) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
            ParityVector x;
            for (std::size_t i = 0; i < k; ++i) x.push_back((code >> i) & 1);
            auto r = realize(x);
            CHECK(r.witness.value() == brute_force_witness(x));
        }
    }
}

TEST_CASE("realize round trips through parity_vector") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t k = rng() % 65;
        ParityVector x;
        for (std::size_t i = 0; i < k; ++i) x.push_back(rng() & 1);
        auto r = realize(x);
        CHECK(parity_vector(r.witness, k) == x);
        CHECK(r.witness.value() <= (BigInt(1) << k));
        CHECK(r.witness.value() % (BigInt(1) << k) == r.residue.value() % (BigInt(1) << k));
    }
}

TEST_CASE("parity vectors are stable under n -> n + 2^k") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        std::size_t k = rng() % 33;
        BigInt n = (BigInt(rng()) << 32) + rng() % 1000 + 1;
        CHECK(parity_vector(Nat(n), k) == parity_vector(Nat(n + (BigInt(1) << k)), k));
    }
}

TEST_CASE("distinct residues give distinct parity vectors (k <= 14)") {
    for (std::size_t k = 0; k <= 14; ++k) {
        std::set<std::string> seen;
        for (std::uint64_t n = 1; n <= (std::uint64_t{1} << k); ++n) {
            seen.insert(parity_vector(Nat(n), k).str());
        }
        CHECK(seen.size() == (std::size_t{1} << k));
    }
}

TEST_CASE("bijection_check") {
    CHECK(bijection_check(0));
    CHECK(bijection_check(1));
    CHECK(bijection_check(12));
    CHECK_THROWS_AS(bijection_check(25), UsageError);
    CHECK_THROWS_AS(bijection_check(20, 16), UsageError);
}

TEST_CASE("estimator on structured vectors") {
    auto alt = description_length_estimate(alternating(1000000));
    MESSAGE("alternating 10^6: " << alt.estimate << " bits");
    CHECK(alt.estimate < 10000);
    CHECK(alt.length == 1000000);
    CHECK(alt.deficiency == 1000000 - static_cast<std::int64_t>(alt.estimate));

    auto zeros = description_length_estimate(ParityVector(std::vector<std::uint8_t>(1024, 0)));
    MESSAGE("zeros 1024: " << zeros.estimate << " bits");
    CHECK(zeros.estimate < 128);

    auto empty = description_length_estimate(ParityVector{});
    CHECK(empty.estimate == 1);  // gamma(1)
    CHECK(empty.estimator == kEstimatorIdentity);
}

TEST_CASE("estimator on uniform random vectors") {
    double total = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto s = description_length_estimate(random_vector(4096, seed, 0));
        total += static_cast<double>(s.estimate);
    }
    MESSAGE("mean estimate over 100 random 4096-bit vectors: " << total / 100);
    CHECK(total / 100 > 3900);
}

TEST_CASE("estimator never exceeds verbatim cost and is deterministic") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t k = rng() % 3000;
        ParityVector x;
        int mode = trial % 3;
        for (std::size_t i = 0; i < k; ++i) {
            bool b = mode == 0 ? (rng() & 1) : mode == 1 ? (i % 7 < 3) : (rng() % 10 == 0);
            x.push_back(b);
        }
        auto s = description_length_estimate(x);
        CHECK(s.estimate <= k + s.overhead);
        CHECK(s.overhead == estimator_overhead(k));
        CHECK(description_length_estimate(x).estimate == s.estimate);
    }
}

TEST_CASE("doubling a vector costs at most a constant more than twice") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t k = rng() % 5000;
        ParityVector x;
        int mode = trial % 4;
        for (std::size_t i = 0; i < k; ++i) {
            bool b = mode == 0   ? (rng() & 1)
                     : mode == 1 ? (i % 13 < 5)
                     : mode == 2 ? (rng() % 20 == 0)
                                 : ((i / 50) % 2 == 0 && (rng() & 1));
            x.push_back(b);
        }
        auto single = description_length_estimate(x);
        auto twice = description_length_estimate(concat(x, x));
        CHECK(static_cast<std::int64_t>(twice.estimate) <=
              2 * static_cast<std::int64_t>(single.estimate) + kDoublingSlack);
    }
}

TEST_CASE("random_fraction") {
    CHECK_THROWS_AS(random_fraction(16, 0, 1), UsageError);

    auto degenerate = random_fraction(8, 256, 3, 0);
    CHECK(degenerate.fraction == 1.0);

    auto r = random_fraction(4096, 1000, 42);
    MESSAGE("random_fraction(4096, 1000): " << r.fraction << " threshold " << r.threshold);
    CHECK(r.fraction >= 0.5);
    CHECK(r.threshold == static_cast<std::int64_t>(estimator_overhead(4096)));

    auto again = random_fraction(4096, 1000, 42, std::nullopt, 4);
    CHECK(again.random_count == r.random_count);
}
