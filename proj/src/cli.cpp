#include "ntw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "ntw/error.hpp"
#include "ntw/report.hpp"
#include "ntw/rng.hpp"

namespace ntw {

namespace {

using nlohmann::json;

struct Settings {
    std::string format = "csv";
    bool header = false;
    unsigned workers = 1;
    std::uint64_t seed = 0;
};

class Emitter {
public:
    Emitter(const Settings& s, std::ostream& out) : jsonl_(s.format == "jsonl"), header_(s.header), out_(out) {}

    bool jsonl() const { return jsonl_; }
    void header(const std::string& columns) {
        if (!jsonl_ && header_) out_ << columns << '\n';
    }
    void record(const std::string& csv, const json& j) {
        if (jsonl_) {
            out_ << j.dump() << '\n';
        } else {
            out_ << csv << '\n';
        }
    }

private:
    bool jsonl_;
    bool header_;
    std::ostream& out_;
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

using Handler = std::function<int(Emitter&, std::ostream& err)>;

struct Command {
    CLI::App* app;
    Handler run;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Collatz, Mobius and Riemann-Siegel workbench", "ntw"};
    app.fallthrough();
    app.require_subcommand(1);
    Settings s;
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    app.add_flag("--header", s.header, "Print a CSV header line");
    app.add_option("--workers", s.workers, "Worker threads (never changes results)")->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", s.seed, "Seed for Monte Carlo subcommands");
    bool version = false;
    app.add_flag("--version", version, "Print version and estimator identities");

    std::vector<Command> commands;
    auto group = [&](const std::string& name, const std::string& desc) {
        auto* g = app.add_subcommand(name, desc);
        g->require_subcommand(1);
        return g;
    };

    // ---- collatz ----------------------------------------------------------
    auto* collatz = group("collatz", "Accelerated Collatz map");

    std::string v_lo, v_hi, v_floor, v_candidates;
    std::uint64_t v_budget = 100000, v_chunks = 0;
    bool v_timing = false;
    auto* verify = collatz->add_subcommand("verify", "Check every start in [lo, hi] reaches 1");
    verify->add_option("--lo", v_lo)->required();
    verify->add_option("--hi", v_hi)->required();
    verify->add_option("--budget", v_budget, "Step budget per start")->capture_default_str();
    verify->add_option("--floor", v_floor, "Stop once an iterate falls below this verified bound");
    verify->add_option("--chunks", v_chunks, "Subranges (0: one per 2^18 starts)");
    verify->add_option("--candidates-csv", v_candidates, "Write budget-exhausted starts here");
    verify->add_flag("--timing", v_timing, "Include wall time in the report");
    commands.push_back({verify, [&](Emitter& e, std::ostream& diag) {
        VerifyOptions opt;
        opt.budget = v_budget;
        opt.chunks = v_chunks;
        opt.workers = s.workers;
        if (!v_floor.empty()) opt.floor = Nat::parse(v_floor);
        auto r = verify_range(Nat::parse(v_lo), Nat::parse(v_hi), opt);
        e.header(summary_csv_header(v_timing));
        e.record(summary_csv(r, v_timing), to_json(r, v_timing));
        if (!v_candidates.empty()) {
            std::ofstream f(v_candidates);
            if (!f) throw UsageError("cannot write " + v_candidates);
            f << candidates_csv(r);
        }
        diag << "verified " << r.verified_count << " of " << (r.verified_count + r.counterexample_candidates.size())
             << " starts in " << r.wall_time << " s\n";
        return r.counterexample_candidates.empty() ? kExitOk : kExitDeficit;
    }});

    std::string t_n;
    std::uint64_t t_max = 100000;
    auto* traj = collatz->add_subcommand("trajectory", "Iterates and parities of one start");
    traj->add_option("--n", t_n)->required();
    traj->add_option("--max-steps", t_max)->capture_default_str();
    commands.push_back({traj, [&](Emitter& e, std::ostream&) {
        auto t = trajectory(Nat::parse(t_n), t_max);
        if (e.jsonl()) {
            json iterates = json::array();
            std::string parities;
            for (std::size_t i = 0; i < t.iterates.size(); ++i) {
                iterates.push_back(nat_json(t.iterates[i]));
                parities += t.parities[i] ? '1' : '0';
            }
            e.record("", {{"start", nat_json(t.start)},
                          {"iterates", iterates},
                          {"parities", parities},
                          {"truncated", t.truncated}});
        } else {
            e.header("i,iterate,parity");
            for (std::size_t i = 0; i < t.iterates.size(); ++i) {
                e.record(csv_row({std::to_string(i), t.iterates[i].str(), t.parities[i] ? "1" : "0"}), {});
            }
        }
        return t.truncated ? kExitDeficit : kExitOk;
    }});

    std::string st_n;
    std::uint64_t st_budget = 100000;
    auto* stop = collatz->add_subcommand("stopping-time", "Total stopping time and largest excursion");
    stop->add_option("--n", st_n)->required();
    stop->add_option("--budget", st_budget)->capture_default_str();
    commands.push_back({stop, [&](Emitter& e, std::ostream&) {
        Nat n = Nat::parse(st_n);
        auto r = total_stopping_time(n, st_budget);
        e.header("n,total_stopping_time,max_excursion");
        if (!r) {
            e.record(csv_row({n.str(), "", ""}),
                     {{"n", nat_json(n)}, {"total_stopping_time", nullptr}, {"max_excursion", nullptr}});
            return kExitDeficit;
        }
        e.record(csv_row({n.str(), std::to_string(r->total_stopping_time), r->max_excursion.str()}),
                 {{"n", nat_json(n)},
                  {"total_stopping_time", r->total_stopping_time},
                  {"max_excursion", nat_json(r->max_excursion)}});
        return kExitOk;
    }});

    // ---- parity -----------------------------------------------------------
    auto* parity = group("parity", "Parity vectors, 2-adic realization, description length");

    std::string px_n;
    std::size_t px_k = 0;
    auto* extract = parity->add_subcommand("extract", "Parity vector of the first k iterates");
    extract->add_option("--n", px_n)->required();
    extract->add_option("--k", px_k)->required();
    commands.push_back({extract, [&](Emitter& e, std::ostream&) {
        Nat n = Nat::parse(px_n);
        auto bits = parity_vector(n, px_k).str();
        e.header("n,k,bits");
        e.record(csv_row({n.str(), std::to_string(px_k), bits}), {{"n", nat_json(n)}, {"k", px_k}, {"bits", bits}});
        return kExitOk;
    }});

    std::string pr_bits;
    auto* real = parity->add_subcommand("realize", "Smallest start with the given parity vector");
    real->add_option("--bits", pr_bits, "Bit string, first iterate leftmost")->required();
    commands.push_back({real, [&](Emitter& e, std::ostream&) {
        auto r = realize(ParityVector::parse(pr_bits));
        e.header("k,residue,witness");
        e.record(realization_csv(r), {{"k", r.k}, {"residue", nat_json(r.residue)}, {"witness", nat_json(r.witness)}});
        return kExitOk;
    }});

    std::size_t pb_k = 0, pb_cap = kBijectionCap;
    auto* bij = parity->add_subcommand("bijection", "Exhaustive residue/vector bijection check");
    bij->add_option("--k", pb_k)->required();
    bij->add_option("--cap", pb_cap, "Largest k allowed (at most 32)")->capture_default_str();
    commands.push_back({bij, [&](Emitter& e, std::ostream&) {
        bool ok = bijection_check(pb_k, pb_cap);
        e.header("k,bijective");
        e.record(csv_row({std::to_string(pb_k), bool_str(ok)}), {{"k", pb_k}, {"bijective", ok}});
        return ok ? kExitOk : kExitDeficit;
    }});

    std::string ps_bits, ps_pattern;
    std::size_t ps_length = 0;
    auto* score = parity->add_subcommand("score", "Description length estimate of a vector");
    auto* ps_bits_opt = score->add_option("--bits", ps_bits);
    auto* ps_pattern_opt = score->add_option("--pattern", ps_pattern)
                               ->check(CLI::IsMember({"alternating", "zeros", "ones", "random"}));
    ps_bits_opt->excludes(ps_pattern_opt);
    score->add_option("--length", ps_length, "Length for --pattern");
    commands.push_back({score, [&](Emitter& e, std::ostream&) {
        ParityVector x;
        if (!ps_pattern.empty()) {
            if (ps_pattern == "random") {
                x = random_vector(ps_length, s.seed, 0);
            } else {
                std::vector<std::uint8_t> bits(ps_length);
                for (std::size_t i = 0; i < ps_length; ++i) {
                    bits[i] = ps_pattern == "ones" ? 1 : ps_pattern == "zeros" ? 0 : static_cast<std::uint8_t>(i % 2);
                }
                x = ParityVector(std::move(bits));
            }
        } else if (ps_bits_opt->count() > 0) {
            x = ParityVector::parse(ps_bits);
        } else {
            throw UsageError("parity score needs --bits or --pattern");
        }
        auto sc = description_length_estimate(x);
        e.header("length,estimate,deficiency,overhead");
        e.record(csv_row({std::to_string(sc.length), std::to_string(sc.estimate), std::to_string(sc.deficiency),
                          std::to_string(sc.overhead)}),
                 {{"length", sc.length},
                  {"estimate", sc.estimate},
                  {"deficiency", sc.deficiency},
                  {"overhead", sc.overhead},
                  {"estimator", std::string(sc.estimator)}});
        return kExitOk;
    }});

    std::size_t pf_k = 0;
    std::uint64_t pf_samples = 0;
    std::optional<std::int64_t> pf_threshold;
    auto* frac = parity->add_subcommand("fraction", "Share of random vectors the estimator cannot compress");
    frac->add_option("--k", pf_k)->required();
    frac->add_option("--samples", pf_samples)->required();
    frac->add_option("--threshold", pf_threshold, "Deficiency threshold in bits (default: estimator overhead)");
    commands.push_back({frac, [&](Emitter& e, std::ostream&) {
        auto r = random_fraction(pf_k, pf_samples, s.seed, pf_threshold, s.workers);
        e.header("k,samples,threshold,random_count,fraction");
        e.record(csv_row({std::to_string(r.k), std::to_string(r.samples), std::to_string(r.threshold),
                          std::to_string(r.random_count), format_double(r.fraction)}),
                 {{"k", r.k},
                  {"samples", r.samples},
                  {"threshold", r.threshold},
                  {"random_count", r.random_count},
                  {"fraction", r.fraction},
                  {"estimator", std::string(kEstimatorIdentity)}});
        return kExitOk;
    }});

    // ---- walk -------------------------------------------------------------
    auto* walk = group("walk", "Multiplicative random-walk model of trajectories");

    WalkConfig wc;
    auto* sim = walk->add_subcommand("simulate", "Fair-coin walk in log space");
    sim->add_option("--steps", wc.steps)->required();
    sim->add_option("--trials", wc.trials)->required();
    sim->add_option("--start-log", wc.start_log);
    sim->add_option("--p-odd", wc.p_odd)->capture_default_str();
    commands.push_back({sim, [&](Emitter& e, std::ostream&) {
        wc.seed = s.seed;
        wc.workers = s.workers;
        auto r = heuristic_walk(wc);
        e.header("trials,steps,mean_step_drift,std_error,fraction_descended");
        e.record(walk_csv(r), {{"trials", r.trials},
                               {"steps", r.steps},
                               {"mean_step_drift", r.mean_step_drift},
                               {"std_error", r.std_error},
                               {"fraction_descended", r.fraction_descended}});
        return kExitOk;
    }});

    std::string we_lo;
    std::uint64_t we_count = 0, we_k = 0;
    auto* emp = walk->add_subcommand("empirical", "Odd share among early iterates of real trajectories");
    emp->add_option("--lo", we_lo)->required();
    emp->add_option("--count", we_count)->required();
    emp->add_option("--k", we_k)->required();
    commands.push_back({emp, [&](Emitter& e, std::ostream&) {
        Nat lo = Nat::parse(we_lo);
        auto f = empirical_parity_frequency(lo, we_count, we_k, s.workers);
        e.header("lo,count,k,odd,total,fraction");
        e.record(csv_row({lo.str(), std::to_string(we_count), std::to_string(we_k), std::to_string(f.odd),
                          std::to_string(f.total), format_double(f.fraction)}),
                 {{"lo", nat_json(lo)},
                  {"count", we_count},
                  {"k", we_k},
                  {"odd", f.odd},
                  {"total", f.total},
                  {"fraction", f.fraction}});
        return kExitOk;
    }});

    // ---- mertens ----------------------------------------------------------
    auto* mert = group("mertens", "Mobius function and Mertens function");

    std::uint64_t m_limit = 0, m_stride = 1, m_segment = kDefaultSegment;
    std::vector<double> m_eps{0.0};
    std::uint64_t m_trials = 0;
    auto add_limit = [&](CLI::App* c) {
        c->add_option("--limit", m_limit)->required();
        c->add_option("--segment", m_segment, "Sieve segment length")->capture_default_str();
    };
    auto sieve_opts = [&] { return SieveOptions{m_segment, s.workers}; };

    auto* msieve = mert->add_subcommand("sieve", "mu(n) for n <= limit");
    add_limit(msieve);
    commands.push_back({msieve, [&](Emitter& e, std::ostream&) {
        e.header("n,mu");
        for_each_mobius_segment(m_limit, sieve_opts(), [&](std::uint64_t first, std::span<const std::int8_t> mu) {
            for (std::size_t i = 0; i < mu.size(); ++i) {
                e.record(csv_row({std::to_string(first + i), std::to_string(mu[i])}), {{"n", first + i}, {"mu", mu[i]}});
            }
        });
        return kExitOk;
    }});

    auto* mseries = mert->add_subcommand("series", "Checkpointed M(n)");
    add_limit(mseries);
    mseries->add_option("--stride", m_stride)->capture_default_str();
    commands.push_back({mseries, [&](Emitter& e, std::ostream&) {
        MertensOptions opt;
        opt.stride = m_stride;
        opt.sieve = sieve_opts();
        auto series = mertens(m_limit, opt);
        e.header("n,M");
        for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
            const auto n = series.checkpoint_n(i);
            e.record(csv_row({std::to_string(n), std::to_string(series.checkpoints[i])}),
                     {{"n", n}, {"M", series.checkpoints[i]}});
        }
        return kExitOk;
    }});

    auto* mgrowth = mert->add_subcommand("growth", "sup |M(n)| / n^(1/2+epsilon) over 2 <= n <= limit");
    add_limit(mgrowth);
    mgrowth->add_option("--epsilon", m_eps, "One or more exponents")->capture_default_str();
    commands.push_back({mgrowth, [&](Emitter& e, std::ostream&) {
        MertensOptions opt;
        opt.stride = m_limit;
        opt.track_epsilons = m_eps;
        opt.sieve = sieve_opts();
        auto series = mertens(m_limit, opt);
        e.header("epsilon,sup,argmax");
        for (double eps : m_eps) {
            auto g = growth_statistic(series, eps);
            e.record(growth_csv(g), {{"epsilon", g.epsilon}, {"sup", g.sup_statistic}, {"argmax", g.argmax_n}});
        }
        return kExitOk;
    }});

    auto* mcomp = mert->add_subcommand("compare", "Mertens statistic against fair +-1 walks");
    add_limit(mcomp);
    mcomp->add_option("--trials", m_trials)->required();
    commands.push_back({mcomp, [&](Emitter& e, std::ostream&) {
        auto c = random_walk_compare(m_limit, m_trials, s.seed, s.workers);
        e.header(
            "limit,walk_length,trials,mertens_statistic,walk_statistic_mean,walk_statistic_sd,percentile_rank,"
            "final_position_mean,final_position_std_error");
        e.record(csv_row({std::to_string(c.limit), std::to_string(c.walk_length), std::to_string(c.trials),
                          format_double(c.mertens_statistic), format_double(c.walk_statistic_mean),
                          format_double(c.walk_statistic_sd), format_double(c.percentile_rank),
                          format_double(c.final_position_mean), format_double(c.final_position_std_error)}),
                 {{"limit", c.limit},
                  {"walk_length", c.walk_length},
                  {"trials", c.trials},
                  {"mertens_statistic", c.mertens_statistic},
                  {"walk_statistic_mean", c.walk_statistic_mean},
                  {"walk_statistic_sd", c.walk_statistic_sd},
                  {"percentile_rank", c.percentile_rank},
                  {"final_position_mean", c.final_position_mean},
                  {"final_position_std_error", c.final_position_std_error}});
        return kExitOk;
    }});

    // ---- zeta -------------------------------------------------------------
    auto* zeta = group("zeta", "Riemann-Siegel Z(t) and zero counting");

    double z_t = 0;
    auto* zz = zeta->add_subcommand("z", "Evaluate Z(t)");
    zz->add_option("--t", z_t)->required();
    commands.push_back({zz, [&](Emitter& e, std::ostream&) {
        auto z = z_function(z_t);
        e.header("t,z,terms,error_bound");
        e.record(csv_row({format_double(z.t), format_double(z.z), std::to_string(z.terms), format_double(z.error_bound)}),
                 {{"t", z.t}, {"z", z.z}, {"terms", z.terms}, {"error_bound", z.error_bound}});
        return kExitOk;
    }});

    auto* zth = zeta->add_subcommand("theta", "Evaluate theta(t)");
    zth->add_option("--t", z_t)->required();
    commands.push_back({zth, [&](Emitter& e, std::ostream&) {
        auto th = riemann_siegel_theta(z_t);
        e.header("t,theta,error_bound");
        e.record(csv_row({format_double(th.t), format_double(th.theta), format_double(th.error_bound)}),
                 {{"t", th.t}, {"theta", th.theta}, {"error_bound", th.error_bound}});
        return kExitOk;
    }});

    double zs_lo = kMinHeight, zs_hi = 0, zs_step = 0.05, zs_tol = 1e-8;
    auto add_scan = [&](CLI::App* c) {
        c->add_option("--lo", zs_lo)->capture_default_str();
        c->add_option("--hi", zs_hi)->required();
        c->add_option("--step", zs_step)->capture_default_str();
    };
    auto* zscan = zeta->add_subcommand("scan", "Sign-change brackets of Z on a grid");
    add_scan(zscan);
    commands.push_back({zscan, [&](Emitter& e, std::ostream&) {
        e.header("t_lo,t_hi");
        for (const auto& b : sign_changes(zs_lo, zs_hi, zs_step, s.workers)) {
            e.record(csv_row({format_double(b.t_lo), format_double(b.t_hi)}), {{"t_lo", b.t_lo}, {"t_hi", b.t_hi}});
        }
        return kExitOk;
    }});

    auto* zref = zeta->add_subcommand("refine", "Scan, then bisect every bracket");
    add_scan(zref);
    zref->add_option("--tol", zs_tol)->capture_default_str();
    commands.push_back({zref, [&](Emitter& e, std::ostream&) {
        e.header("index,t");
        std::size_t index = 0;
        for (const auto& b : sign_changes(zs_lo, zs_hi, zs_step, s.workers)) {
            double t = refine_zero(b, zs_tol);
            ++index;
            e.record(csv_row({std::to_string(index), format_double(t)}), {{"index", index}, {"t", t}});
        }
        return kExitOk;
    }});

    double zc_T = 0;
    auto* zcount = zeta->add_subcommand("count", "Analytic zero count up to T");
    zcount->add_option("--T", zc_T)->required();
    commands.push_back({zcount, [&](Emitter& e, std::ostream& diag) {
        auto c = zero_count_analytic(zc_T);
        if (c.near_half) diag << "warning: theta(T)/pi + 1 = " << c.main_term << " is near a half-integer\n";
        e.header("T,count,main_term,near_half");
        e.record(csv_row({format_double(c.T), std::to_string(c.count), format_double(c.main_term), bool_str(c.near_half)}),
                 {{"T", c.T}, {"count", c.count}, {"main_term", c.main_term}, {"near_half", c.near_half}});
        return kExitOk;
    }});

    double zv_T = 0, zv_step = 0.05;
    unsigned zv_refine = RHOptions{}.max_refinements;
    auto* zver = zeta->add_subcommand("verify", "Compare sign changes on [10, T] with the analytic count");
    zver->add_option("--T", zv_T)->required();
    zver->add_option("--step", zv_step)->capture_default_str();
    zver->add_option("--max-refinements", zv_refine)->capture_default_str();
    commands.push_back({zver, [&](Emitter& e, std::ostream& diag) {
        RHOptions opt;
        opt.max_refinements = zv_refine;
        opt.workers = s.workers;
        auto r = verify_rh(zv_T, zv_step, opt);
        if (r.near_half) diag << "warning: analytic count main term " << r.main_term << " is near a half-integer\n";
        e.header(rh_csv_header());
        e.record(rh_csv(r), to_json(r));
        return r.verified ? kExitOk : kExitDeficit;
    }});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        if (std::find(args.begin(), args.end(), "--version") != args.end()) {
            out << "ntw " << kVersion << '\n'
                << "estimator: " << kEstimatorIdentity << '\n'
                << "z-correction-order: " << kCorrectionOrder << '\n'
                << "rng: " << kRngIdentity << '\n';
            return kExitOk;
        }
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        // Group-level help (e.g. "ntw zeta --help") lands here too.
        if (ex.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "ntw: " << ex.what() << '\n';
        return kExitUsage;
    }

    Emitter emitter(s, out);
    try {
        for (auto& c : commands) {
            if (c.app->parsed()) return c.run(emitter, err);
        }
    } catch (const UsageError& ex) {
        err << "ntw: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& ex) {
        err << "ntw: " << ex.what() << '\n';
        return kExitUsage;
    }
    err << "ntw: no subcommand given\n";
    return kExitUsage;
}

}  // namespace ntw
