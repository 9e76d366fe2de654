#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ntw/collatz.hpp"
#include "ntw/mobius.hpp"
#include "ntw/parity.hpp"
#include "ntw/stochastic.hpp"
#include "ntw/zeta.hpp"

namespace ntw {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json nat_json(const Nat& n);

/// Joins already formatted fields with commas.
std::string csv_row(const std::vector<std::string>& fields);

nlohmann::json to_json(const VerificationReport& r, bool include_timing);
std::string summary_csv(const VerificationReport& r, bool include_timing);
std::string summary_csv_header(bool include_timing);
/// "n,steps_taken,last_iterate" header followed by one line per candidate.
std::string candidates_csv(const VerificationReport& r);

std::string realization_csv(const Realization& r);  // k,residue,witness
std::string walk_csv(const WalkSummary& s);         // trials,steps,mean_step_drift,std_error,fraction_descended
std::string growth_csv(const GrowthReport& g);      // epsilon,sup,argmax

nlohmann::json to_json(const RHReport& r);
std::string rh_csv(const RHReport& r);
std::string rh_csv_header();

}  // namespace ntw
