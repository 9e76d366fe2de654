// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli_harness.hpp"
#include "ntw/collatz.hpp"
#include "ntw/mobius.hpp"
#include "ntw/parity.hpp"
#include "ntw/stochastic.hpp"
#include "ntw/zeta.hpp"
#include "oracles.hpp"

using namespace ntw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, const std::function<void(Check&)>& body) {
    Check c;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& ex) {
        c.ok = false;
        c.detail << " [exception: " << ex.what() << "]";
    }
    if (!c.ok) ++failures;
    std::printf("criterion %d %s: %s (%.1f s)%s\n", id, name, c.ok ? "PASS" : "FAIL", seconds_since(t0),
                c.detail.str().c_str());
    std::fflush(stdout);
}

void collatz_range(Check& c) {
    const std::vector<std::string> args = {"--format", "jsonl", "collatz", "verify", "--lo", "1", "--hi", "10000000",
                                           "--budget", "100000"};
    auto t0 = Clock::now();
    auto one = run(with_workers(args, 1));
    const double single = seconds_since(t0);
    auto eight = run(with_workers(args, 8));
    auto j = nlohmann::json::parse(one.out);
    c.detail << " verified=" << j["verified_count"] << " candidates=" << j["counterexample_candidates"].size()
             << " single-worker=" << single << "s";
    c.require(one.code == 0, "exit code 0");
    c.require(j["verified_count"] == 10000000, "verified count 10^7");
    c.require(j["counterexample_candidates"].empty(), "no candidates");
    c.require(single < 120.0, "single worker under 120 s");
    c.require(one.out == eight.out && one.code == eight.code, "8-worker output identical");
}

void bijection(Check& c) {
    for (std::size_t k = 1; k <= 14; ++k) c.require(bijection_check(k), "bijection k=" + std::to_string(k));
    std::size_t trips = 0;
    for (std::size_t k : {16, 32, 64}) {
        const BigInt modulus = BigInt(1) << k;
        for (std::uint64_t i = 0; i < 10000; ++i) {
            auto x = random_vector(k, 2024, i);
            auto r = realize(x);
            bool ok = r.k == k && r.residue.value() <= modulus && parity_vector(r.witness, k) == x &&
                      parity_vector(r.residue, k) == x;
            if (!ok) {
                c.require(false, "round trip k=" + std::to_string(k) + " index " + std::to_string(i));
                return;
            }
            ++trips;
        }
    }
    c.detail << " k<=14 exhaustive, " << trips << " round trips";
}

void drift(Check& c) {
    WalkConfig cfg;
    cfg.steps = 1000000;
    cfg.trials = 100;
    cfg.seed = 20240901;
    cfg.workers = 8;
    auto w = heuristic_walk(cfg);
    const double target = 0.5 * std::log(0.75);
    const double z = (w.mean_step_drift - target) / w.std_error;
    c.detail << " drift=" << w.mean_step_drift << " se=" << w.std_error << " target=" << target << " z=" << z;
    c.require(std::abs(z) <= 3.0, "within 3 standard errors");
}

void mixing(Check& c) {
    auto f = empirical_parity_frequency(Nat(BigInt(1) << 40), 10000, 64, 8);
    c.detail << " odd share=" << f.fraction << " (" << f.odd << "/" << f.total << ")";
    c.require(f.fraction >= 0.48 && f.fraction <= 0.52, "share in [0.48, 0.52]");
}

void mertens_checks(Check& c) {
    c.require(mertens(10).final_value == -1, "M(10) = -1");

    std::int64_t direct = 0;
    for (std::uint64_t n = 1; n <= 1000000; ++n) direct += oracle::mu(n);
    const auto m6 = mertens(1000000).final_value;
    c.detail << " M(10^6)=" << m6 << " oracle=" << direct;
    c.require(m6 == direct, "M(10^6) matches direct summation");

    const std::uint64_t small = 10000;
    auto table = mobius_sieve(small);
    auto series = mertens(small);
    bool telescoping = series.at(1) == 1;
    for (std::uint64_t n = 2; n <= small; ++n) telescoping &= series.at(n) - series.at(n - 1) == table.mu(n);
    c.require(telescoping, "telescoping to 10^4");
    bool dirichlet = true;
    for (std::uint64_t n = 1; n <= small; ++n) {
        int sum = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) sum += table.mu(d);
        dirichlet &= sum == (n == 1 ? 1 : 0);
    }
    c.require(dirichlet, "divisor sums of mu to 10^4");

    MertensOptions opt;
    opt.stride = 10000000;
    opt.track_epsilons = {0.0};
    opt.sieve.workers = 8;
    auto g = growth_statistic(mertens(10000000, opt), 0.0);
    c.detail << " sup|M|/sqrt(n)=" << g.sup_statistic << " at n=" << g.argmax_n;
    c.require(g.sup_statistic < 1.0, "growth statistic below 1 to 10^7");
}

void zeta_checks(Check& c) {
    auto t0 = Clock::now();
    auto r = verify_rh(100, 0.05, RHOptions{4, 8});
    c.detail << " sign changes=" << r.sign_change_count << " analytic=" << r.analytic_count;
    c.require(r.sign_change_count == 29 && r.analytic_count == 29 && r.verified, "29 = 29 verified");

    auto brackets = sign_changes(kMinHeight, 22, 0.05);
    c.require(brackets.size() == 2, "two brackets below 22");
    if (brackets.size() >= 2) {
        const double z1 = refine_zero(brackets[0], 1e-10), z2 = refine_zero(brackets[1], 1e-10);
        c.detail << " zeros=" << z1 << "," << z2;
        c.require(std::abs(z1 - 14.1347) <= 1e-3, "first zero 14.1347");
        c.require(std::abs(z2 - 21.0220) <= 1e-3, "second zero 21.0220");
    }

    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> height(15.0, 200.0);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        const double t = height(rng);
        auto z = z_function(t);
        auto em = oracle::zeta_em({0.5, t}, static_cast<int>(t) + 30);
        const double gap = std::abs(std::abs(z.z) - std::abs(em.value));
        const double allowed = z.error_bound + em.error;
        worst = std::max(worst, gap / allowed);
        c.require(gap <= allowed, "Euler-Maclaurin agreement at t=" + std::to_string(t));
    }
    const double elapsed = seconds_since(t0);
    c.detail << " worst gap/bound=" << worst << " runtime=" << elapsed << "s";
    c.require(elapsed < 60.0, "runtime under 60 s");
}

void randomness_proxy(Check& c) {
    std::vector<std::uint8_t> alt(1000000);
    for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = static_cast<std::uint8_t>(i % 2);
    const auto a = description_length_estimate(ParityVector(std::move(alt)));
    c.detail << " alternating=" << a.estimate;
    c.require(a.estimate < 10000, "alternating 10^6 bits under 10^4");

    double total = 0;
    for (std::uint64_t i = 0; i < 100; ++i) total += description_length_estimate(random_vector(4096, 31337, i)).estimate;
    c.detail << " random mean=" << total / 100;
    c.require(total / 100 > 3900, "random 4096-bit mean above 3900");

    auto f = random_fraction(4096, 1000, 4242, std::nullopt, 8);
    c.detail << " fraction=" << f.fraction << " (threshold " << f.threshold << ")";
    c.require(f.fraction >= 0.5, "random fraction at least 0.5");
}

void determinism(Check& c) {
    std::size_t n = 0;
    for (const auto& args : determinism_corpus()) {
        auto a = run(with_workers(args, 1));
        auto b = run(with_workers(args, 8));
        auto again = run(with_workers(args, 1));
        std::string joined;
        for (const auto& s : args) joined += s + " ";
        c.require(a.code != 2 && !a.out.empty(), "runs: " + joined);
        c.require(a.out == b.out && a.code == b.code, "1 vs 8 workers: " + joined);
        c.require(a.out == again.out, "repeat run: " + joined);
        ++n;
    }
    c.detail << " " << n << " invocations";
}

}  // namespace

int main() {
    criterion(1, "collatz range [1, 10^7]", collatz_range);
    criterion(2, "parity bijection and round trips", bijection);
    criterion(3, "heuristic walk drift", drift);
    criterion(4, "parity mixing near 2^40", mixing);
    criterion(5, "mertens values and growth", mertens_checks);
    criterion(6, "zeta zeros and counts", zeta_checks);
    criterion(7, "description length proxy", randomness_proxy);
    criterion(8, "cli determinism", determinism);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
