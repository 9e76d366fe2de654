#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iterator>

#include <json.hpp>

#include "cli_harness.hpp"

TEST_CASE("realize example prints a bare CSV row") {
    auto r = run({"parity", "realize", "--bits", "111"});
    CHECK(r.code == 0);
    CHECK(r.out == "3,7,7\n");
}

TEST_CASE("header flag adds the column line") {
    auto r = run({"--header", "parity", "realize", "--bits", "111"});
    CHECK(r.out == "k,residue,witness\n3,7,7\n");
}

TEST_CASE("zeta verify to 100") {
    auto r = run({"zeta", "verify", "--T", "100", "--step", "0.05"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("100,29,29,true,", 0) == 0);

    auto j = nlohmann::json::parse(run({"--format", "jsonl", "zeta", "verify", "--T", "100"}).out);
    CHECK(j["sign_change_count"] == 29);
    CHECK(j["analytic_count"] == 29);
    CHECK(j["verified"] == true);
}

TEST_CASE("zeta verify deficit exits 1") {
    // The analytic count rounds 3.565 up to 4 while only 3 zeros lie below 30.
    auto r = run({"zeta", "verify", "--T", "30"});
    CHECK(r.code == 1);
    CHECK(r.out.find(",false,") != std::string::npos);
}

TEST_CASE("collatz verify summary and candidates file") {
    auto r = run({"collatz", "verify", "--lo", "1", "--hi", "1000"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1000,100000,1000,0,113,1\n");
    CHECK(r.err.find("verified 1000") != std::string::npos);

    const std::string path = "test_cli_candidates.csv";
    auto c = run({"collatz", "verify", "--lo", "27", "--hi", "30", "--budget", "10", "--candidates-csv", path});
    CHECK(c.code == 1);
    std::ifstream f(path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("n,steps_taken,last_iterate\n", 0) == 0);
    CHECK(text.find("\n27,10,") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("timing only appears on request") {
    auto plain = run({"--format", "jsonl", "collatz", "verify", "--lo", "1", "--hi", "10"});
    CHECK(plain.out.find("wall_time") == std::string::npos);
    auto timed = run({"--format", "jsonl", "collatz", "verify", "--lo", "1", "--hi", "10", "--timing"});
    CHECK(timed.out.find("wall_time") != std::string::npos);
}

TEST_CASE("big starts are printed exactly") {
    auto r = run({"--format", "jsonl", "collatz", "stopping-time", "--n", "340282366920938463463374607431768211457"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == "340282366920938463463374607431768211457");
    CHECK(j["max_excursion"].is_string());
}

TEST_CASE("trajectory rows and truncation") {
    auto r = run({"collatz", "trajectory", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,3,1\n1,5,1\n2,8,0\n3,4,0\n4,2,0\n5,1,1\n");
    CHECK(run({"collatz", "trajectory", "--n", "27", "--max-steps", "5"}).code == 1);
    CHECK(run({"collatz", "stopping-time", "--n", "27", "--budget", "5"}).code == 1);
}

TEST_CASE("zeta refine lists zeros with 1-based indices") {
    auto r = run({"zeta", "refine", "--hi", "22"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1,14.1348", 0) == 0);
    CHECK(r.out.find("\n2,21.022") != std::string::npos);
}

TEST_CASE("version lists estimator and correction order") {
    auto r = run({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out.find("estimator: lz77-greedy/v1") != std::string::npos);
    CHECK(r.out.find("z-correction-order: 2") != std::string::npos);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"zeta", "verify", "--help"}).code == 0);
}

TEST_CASE("malformed input exits 2 with a diagnostic") {
    const std::vector<std::vector<std::string>> bad = {
        {},
        {"collatz"},
        {"collatz", "bogus"},
        {"collatz", "verify", "--lo", "1"},
        {"collatz", "verify", "--lo", "1", "--hi", "10", "--unknown"},
        {"collatz", "verify", "--lo", "10", "--hi", "1"},
        {"collatz", "verify", "--lo", "0", "--hi", "10"},
        {"collatz", "verify", "--lo", "1", "--hi", "10", "--budget", "0"},
        {"collatz", "verify", "--lo", "abc", "--hi", "10"},
        {"collatz", "trajectory", "--n", "-3"},
        {"parity", "realize", "--bits", "10201"},
        {"parity", "bijection", "--k", "40"},
        {"parity", "fraction", "--k", "64", "--samples", "0"},
        {"parity", "score"},
        {"parity", "score", "--bits", "1", "--pattern", "ones"},
        {"walk", "simulate", "--steps", "10", "--trials", "0"},
        {"walk", "simulate", "--steps", "10", "--trials", "1", "--p-odd", "1.5"},
        {"walk", "empirical", "--lo", "5", "--count", "0", "--k", "3"},
        {"mertens", "growth", "--limit", "100", "--epsilon", "-1"},
        {"zeta", "z", "--t", "5"},
        {"zeta", "z", "--t", "abc"},
        {"zeta", "verify", "--T", "12"},
        {"zeta", "scan", "--hi", "40", "--step", "0"},
        {"--format", "xml", "parity", "realize", "--bits", "1"},
        {"--workers", "0", "parity", "realize", "--bits", "1"},
    };
    for (const auto& args : bad) {
        auto r = run(args);
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        INFO(joined);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(!r.err.empty());
        CHECK(r.err.find('\n') == r.err.size() - 1);
    }
}

TEST_CASE("output is byte-identical across worker counts and runs") {
    for (const auto& args : determinism_corpus()) {
        auto a = run(with_workers(args, 1));
        auto b = run(with_workers(args, 8));
        auto c = run(with_workers(args, 1));
        INFO(args[0] << " " << args[1]);
        CHECK(a.code != 2);
        CHECK(a.code == b.code);
        CHECK(!a.out.empty());
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}
