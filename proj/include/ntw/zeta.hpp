#pragma once

#include <cstdint>
#include <vector>

namespace ntw {

/// Every evaluator requires t >= 10; below that the asymptotic expansions
/// are not trusted, and zeta has no zeros with 0 < t < 14 anyway.
inline constexpr double kMinHeight = 10.0;

/// Number of Riemann-Siegel remainder terms (C0, C1, C2) used by z_function.
inline constexpr int kCorrectionOrder = 2;

struct ThetaValue {
    double t = 0.0;
    double theta = 0.0;
    double error_bound = 0.0;  // first omitted term of the expansion
};

/// theta(t) = (t/2) ln(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760t^3).
ThetaValue riemann_siegel_theta(double t);

struct ZEvaluation {
    double t = 0.0;
    double z = 0.0;
    std::uint64_t terms = 0;  // floor(sqrt(t / 2pi)) main-sum terms
    double error_bound = 0.0;
};

/// Hardy's Z function by the Riemann-Siegel formula:
///
///   Z(t) = 2 sum_{n<=m} n^{-1/2} cos(theta(t) - t ln n) + R(t),  m = floor(sqrt(t/2pi)),
///   R(t) ~ (-1)^{m-1} (t/2pi)^{-1/4} (C0(p) + C1(p) a^{-1} + C2(p) a^{-2}),
///
/// with a = sqrt(t/2pi) and p = a - m. The C_k come from a Taylor table of
/// Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p) about p = 1/2. The reported
/// bound is 2e-3 (t/2pi)^{-7/4} for the truncated remainder (the largest
/// observed constant on [10, 6000] is 5.7e-4) plus theta and rounding error.
/// Cost is O(sqrt(t)).
ZEvaluation z_function(double t);

struct ZeroBracket {
    double t_lo = 0.0;
    double t_hi = 0.0;
};

/// Grid t_lo + i * grid_step (plus t_hi itself when it falls between grid
/// points). Every pair of consecutive nonzero values with opposite signs is
/// a bracket, so the count is a lower bound for the zeros in [t_lo, t_hi].
/// Halving grid_step keeps every old grid point, so the count cannot drop.
std::vector<ZeroBracket> sign_changes(double t_lo, double t_hi, double grid_step, unsigned workers = 1);

struct ZeroCount {
    double T = 0.0;
    std::uint64_t count = 0;
    double main_term = 0.0;  // theta(T)/pi + 1
    bool near_half = false;  // main term within 0.3 of a half-integer
};

/// Nearest integer to theta(T)/pi + 1. This equals N(T) whenever |S(T)| < 1/2;
/// near_half flags heights where that is doubtful.
ZeroCount zero_count_analytic(double T);

/// Bisection until the bracket is narrower than tol; returns the midpoint.
double refine_zero(const ZeroBracket& bracket, double tol);

struct RHOptions {
    unsigned max_refinements = 4;  // grid halvings tried before reporting a deficit
    unsigned workers = 1;
};

struct RHReport {
    double T = 0.0;
    std::uint64_t sign_change_count = 0;
    std::uint64_t analytic_count = 0;
    bool verified = false;
    double grid_step = 0.0;  // final resolution used
    double initial_grid_step = 0.0;
    unsigned refinements = 0;
    double main_term = 0.0;
    bool near_half = false;
};

/// Counts sign changes of Z on [10, T] and compares them with the analytic
/// count. A deficit halves the grid up to options.max_refinements times.
/// verified is true only if the two counts are equal.
RHReport verify_rh(double T, double grid_step, const RHOptions& options = {});

}  // namespace ntw
