#include "ntw/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ntw/error.hpp"
#include "ntw/parallel.hpp"

namespace ntw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Taylor coefficients of Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p) in
// powers of x = p - 1/2. Psi is even in x, so only x^0, x^2, ... appear.
constexpr std::array<double, 31> kPsiEven = {
    0.3826834323650897717285,     1.748961872310081797441,     2.118025207685496373185,
    -0.8707216670511480739189,    -3.473311224346516707306,    -1.662694730899932449643,
    1.216731288919232134477,      1.301430416100797577301,     0.03051102182736167242109,
    -0.3755803051545095242798,    -0.1085784416564065974355,   0.05183290299954962337576,
    0.0299994806199022759204,     -0.00227593967061256422602,  -0.00438264741658033830594,
    -0.0004064230183729846993072, 0.0004006097785422113927891, 0.00008971057991388841297834,
    -0.0000230256500272391071161, -0.00000938000660190679248472, 6.32351494760910750425e-7,
    6.551022819231501666212e-7,   2.210523745552697258661e-8,  -3.322316176445628835031e-8,
    -3.734910989933656081765e-9,  1.244506706079773919515e-9,  2.476820537650219184251e-10,
    -3.284272816891627194459e-11, -1.130540685229840367788e-11, 4.565463979588693927593e-13,
    3.959848094524921519585e-13,
};

constexpr std::size_t kDegree = 2 * (kPsiEven.size() - 1);
using Poly = std::array<double, kDegree + 1>;

constexpr Poly psi_poly() {
    Poly p{};
    for (std::size_t j = 0; j < kPsiEven.size(); ++j) p[2 * j] = kPsiEven[j];
    return p;
}

constexpr Poly derivative(const Poly& p, int times) {
    Poly d = p;
    for (int t = 0; t < times; ++t) {
        Poly next{};
        for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = static_cast<double>(i) * d[i];
        d = next;
    }
    return d;
}

constexpr Poly kPsi = psi_poly();
constexpr Poly kPsi2 = derivative(kPsi, 2);
constexpr Poly kPsi3 = derivative(kPsi, 3);
constexpr Poly kPsi6 = derivative(kPsi, 6);

double horner(const Poly& p, double x) {
    double r = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

void require_height(double t, const char* what) {
    if (!(t >= kMinHeight)) {
        throw DomainError(std::string(what) + ": t = " + std::to_string(t) + " is below the floor t >= 10");
    }
}

double theta_unchecked(double t) {
    return 0.5 * t * std::log(t / (2 * kPi)) - 0.5 * t - kPi / 8 + 1.0 / (48 * t) + 7.0 / (5760 * t * t * t);
}

double theta_error(double t) { return 31.0 / (80640 * std::pow(t, 5)); }

int sign_of(double v) { return (v > 0) - (v < 0); }

}  // namespace

ThetaValue riemann_siegel_theta(double t) {
    require_height(t, "riemann_siegel_theta");
    return {t, theta_unchecked(t), theta_error(t)};
}

ZEvaluation z_function(double t) {
    require_height(t, "z_function");
    const double a = std::sqrt(t / (2 * kPi));
    const auto m = static_cast<std::uint64_t>(std::floor(a));
    const double th = theta_unchecked(t);

    double sum = 0.0, weight = 0.0;
    for (std::uint64_t n = 1; n <= m; ++n) {
        const double dn = static_cast<double>(n);
        const double w = 1.0 / std::sqrt(dn);
        sum += w * std::cos(th - t * std::log(dn));
        weight += w;
    }

    const double x = (a - static_cast<double>(m)) - 0.5;
    const double c0 = horner(kPsi, x);
    const double c1 = -horner(kPsi3, x) / (96 * kPi * kPi);
    const double c2 = horner(kPsi2, x) / (64 * kPi * kPi) + horner(kPsi6, x) / (18432 * kPi * kPi * kPi * kPi);
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^(m-1)
    const double remainder = sign * std::pow(a, -0.5) * (c0 + c1 / a + c2 / (a * a));

    const double truncation = 2e-3 * std::pow(a, -3.5);
    const double phase_error = theta_error(t) + 4 * kEps * (std::abs(th) + t * std::log(static_cast<double>(m)) + 1);
    const double error = truncation + 2 * weight * phase_error + 8 * kEps * (2 * weight + 1);
    return {t, 2 * sum + remainder, m, error};
}

std::vector<ZeroBracket> sign_changes(double t_lo, double t_hi, double grid_step, unsigned workers) {
    if (!(grid_step > 0) || !std::isfinite(grid_step)) throw UsageError("grid step must be positive");
    if (!(t_lo < t_hi)) throw UsageError("empty interval: t_hi must exceed t_lo");
    require_height(t_lo, "sign_changes");

    const auto steps = static_cast<std::uint64_t>(std::floor((t_hi - t_lo) / grid_step));
    std::vector<double> grid;
    grid.reserve(steps + 2);
    for (std::uint64_t i = 0; i <= steps; ++i) {
        const double t = t_lo + static_cast<double>(i) * grid_step;
        if (t > t_hi) break;
        grid.push_back(t);
    }
    if (grid.back() < t_hi) grid.push_back(t_hi);

    std::vector<int> signs(grid.size());
    constexpr std::size_t kBlock = 256;
    parallel_for((grid.size() + kBlock - 1) / kBlock, workers, [&](std::size_t b) {
        const std::size_t end = std::min(grid.size(), (b + 1) * kBlock);
        for (std::size_t i = b * kBlock; i < end; ++i) signs[i] = sign_of(z_function(grid[i]).z);
    });

    std::vector<ZeroBracket> brackets;
    std::size_t prev = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (signs[i] == 0) continue;
        if (prev != grid.size() && signs[prev] != signs[i]) brackets.push_back({grid[prev], grid[i]});
        prev = i;
    }
    return brackets;
}

ZeroCount zero_count_analytic(double T) {
    require_height(T, "zero_count_analytic");
    const double main = theta_unchecked(T) / kPi + 1;
    ZeroCount c;
    c.T = T;
    c.main_term = main;
    c.count = main <= 0 ? 0 : static_cast<std::uint64_t>(std::llround(main));
    c.near_half = std::abs((main - std::floor(main)) - 0.5) < 0.3;
    return c;
}

double refine_zero(const ZeroBracket& bracket, double tol) {
    if (!(tol > 0)) throw UsageError("tolerance must be positive");
    if (!(bracket.t_lo < bracket.t_hi)) throw UsageError("bracket must satisfy t_lo < t_hi");
    double lo = bracket.t_lo, hi = bracket.t_hi;
    int s_lo = sign_of(z_function(lo).z);
    const int s_hi = sign_of(z_function(hi).z);
    if (s_lo == 0) return lo;
    if (s_hi == 0) return hi;
    if (s_lo == s_hi) throw UsageError("bracket endpoints have the same sign");
    while (hi - lo >= tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const int s = sign_of(z_function(mid).z);
        if (s == 0) return mid;
        if (s == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

RHReport verify_rh(double T, double grid_step, const RHOptions& options) {
    if (!(T >= 14)) throw UsageError("verify_rh needs T >= 14 so that at least one zero is in range");
    if (!(grid_step > 0) || !std::isfinite(grid_step)) throw UsageError("grid step must be positive");

    const ZeroCount analytic = zero_count_analytic(T);
    RHReport report;
    report.T = T;
    report.analytic_count = analytic.count;
    report.main_term = analytic.main_term;
    report.near_half = analytic.near_half;
    report.initial_grid_step = grid_step;

    double step = grid_step;
    for (unsigned round = 0;; ++round) {
        report.sign_change_count = sign_changes(kMinHeight, T, step, options.workers).size();
        report.grid_step = step;
        report.refinements = round;
        if (report.sign_change_count >= report.analytic_count || round == options.max_refinements) break;
        step *= 0.5;
    }
    report.verified = report.sign_change_count == report.analytic_count;
    return report;
}

}  // namespace ntw
