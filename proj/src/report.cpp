#include "ntw/report.hpp"

#include <charconv>
#include <sstream>

namespace ntw {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

nlohmann::json nat_json(const Nat& n) {
    if (auto v = n.to_u64()) return *v;
    return n.str();
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    return out;
}

nlohmann::json to_json(const VerificationReport& r, bool include_timing) {
    nlohmann::json candidates = nlohmann::json::array();
    for (const auto& c : r.counterexample_candidates) {
        candidates.push_back({{"n", nat_json(c.n)},
                              {"budget", c.budget},
                              {"steps_taken", c.steps_taken},
                              {"last_iterate", nat_json(c.last_iterate)}});
    }
    nlohmann::json j = {{"lo", nat_json(r.lo)},
                        {"hi", nat_json(r.hi)},
                        {"budget", r.budget},
                        {"floor", r.floor ? nat_json(*r.floor) : nlohmann::json(nullptr)},
                        {"verified_count", r.verified_count},
                        {"counterexample_candidates", candidates},
                        {"max_stopping_time_seen", r.max_stopping_time_seen},
                        {"chunk_count", r.chunk_count}};
    if (include_timing) j["wall_time"] = r.wall_time;
    return j;
}

std::string summary_csv_header(bool include_timing) {
    std::string h = "lo,hi,budget,verified_count,candidates,max_stopping_time_seen,chunk_count";
    if (include_timing) h += ",wall_time";
    return h;
}

std::string summary_csv(const VerificationReport& r, bool include_timing) {
    std::vector<std::string> f{r.lo.str(),
                               r.hi.str(),
                               std::to_string(r.budget),
                               std::to_string(r.verified_count),
                               std::to_string(r.counterexample_candidates.size()),
                               std::to_string(r.max_stopping_time_seen),
                               std::to_string(r.chunk_count)};
    if (include_timing) f.push_back(format_double(r.wall_time));
    return csv_row(f);
}

std::string candidates_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "n,steps_taken,last_iterate\n";
    for (const auto& c : r.counterexample_candidates) {
        out << c.n.str() << ',' << c.steps_taken << ',' << c.last_iterate.str() << '\n';
    }
    return out.str();
}

std::string realization_csv(const Realization& r) {
    return csv_row({std::to_string(r.k), r.residue.str(), r.witness.str()});
}

std::string walk_csv(const WalkSummary& s) {
    return csv_row({std::to_string(s.trials), std::to_string(s.steps), format_double(s.mean_step_drift),
                    format_double(s.std_error), format_double(s.fraction_descended)});
}

std::string growth_csv(const GrowthReport& g) {
    return csv_row({format_double(g.epsilon), format_double(g.sup_statistic), std::to_string(g.argmax_n)});
}

nlohmann::json to_json(const RHReport& r) {
    return {{"T", r.T},
            {"sign_change_count", r.sign_change_count},
            {"analytic_count", r.analytic_count},
            {"verified", r.verified},
            {"grid_step", r.grid_step},
            {"initial_grid_step", r.initial_grid_step},
            {"refinements", r.refinements},
            {"main_term", r.main_term},
            {"near_half", r.near_half}};
}

std::string rh_csv_header() {
    return "T,sign_change_count,analytic_count,verified,grid_step,refinements,main_term,near_half";
}

std::string rh_csv(const RHReport& r) {
    return csv_row({format_double(r.T), std::to_string(r.sign_change_count), std::to_string(r.analytic_count),
                    r.verified ? "true" : "false", format_double(r.grid_step), std::to_string(r.refinements),
                    format_double(r.main_term), r.near_half ? "true" : "false"});
}

}  // namespace ntw
