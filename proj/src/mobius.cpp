#include "ntw/mobius.hpp"

#include <cmath>
#include <string>

#include "ntw/error.hpp"
#include "ntw/parallel.hpp"
#include "ntw/rng.hpp"

namespace ntw {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

// mu on [first, first + out.size()).
void sieve_segment(std::uint64_t first, std::span<std::int8_t> out, std::span<const std::uint64_t> primes,
                   std::vector<std::uint64_t>& product) {
    const std::uint64_t end = first + out.size();
    product.assign(out.size(), 1);
    std::fill(out.begin(), out.end(), std::int8_t{1});
    for (std::uint64_t p : primes) {
        if (p * p >= end) break;
        for (std::uint64_t m = (first + p - 1) / p * p; m < end; m += p) {
            out[m - first] = static_cast<std::int8_t>(-out[m - first]);
            product[m - first] *= p;
        }
        const std::uint64_t sq = p * p;
        for (std::uint64_t m = (first + sq - 1) / sq * sq; m < end; m += sq) out[m - first] = 0;
    }
    // Whatever is left over after the small primes is one prime above sqrt(end).
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] != 0 && product[i] != first + i) out[i] = static_cast<std::int8_t>(-out[i]);
    }
}

void require_limit(std::uint64_t limit) {
    if (limit == 0) throw UsageError("limit must be at least 1");
}

}  // namespace

void for_each_mobius_segment(std::uint64_t limit, const SieveOptions& options,
                             const std::function<void(std::uint64_t, std::span<const std::int8_t>)>& sink) {
    require_limit(limit);
    if (options.segment == 0) throw UsageError("segment size must be at least 1");
    const auto primes = primes_up_to(isqrt(limit));
    const std::uint64_t seg = options.segment;
    const std::uint64_t segments = (limit + seg - 1) / seg;
    const unsigned workers = std::max(1u, options.workers);

    std::vector<std::vector<std::int8_t>> buffers(workers);
    std::vector<std::vector<std::uint64_t>> scratch(workers);
    for (std::uint64_t batch = 0; batch < segments; batch += workers) {
        const std::uint64_t in_batch = std::min<std::uint64_t>(workers, segments - batch);
        parallel_for(in_batch, workers, [&](std::size_t j) {
            const std::uint64_t first = 1 + (batch + j) * seg;
            const std::uint64_t len = std::min(seg, limit - first + 1);
            buffers[j].resize(len);
            sieve_segment(first, buffers[j], primes, scratch[j]);
        });
        for (std::uint64_t j = 0; j < in_batch; ++j) sink(1 + (batch + j) * seg, buffers[j]);
    }
}

MobiusTable mobius_sieve(std::uint64_t limit, const SieveOptions& options) {
    require_limit(limit);
    MobiusTable table{limit, {}};
    table.values.reserve(limit);
    for_each_mobius_segment(limit, options, [&](std::uint64_t, std::span<const std::int8_t> mu) {
        table.values.insert(table.values.end(), mu.begin(), mu.end());
    });
    return table;
}

MobiusTable mobius_sieve_monolithic(std::uint64_t limit) {
    require_limit(limit);
    std::vector<std::int8_t> mu(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    mu[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (i * p > limit) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return MobiusTable{limit, std::vector<std::int8_t>(mu.begin() + 1, mu.end())};
}

std::int64_t MertensSeries::at(std::uint64_t n) const {
    if (n == 0 || n > limit) throw UsageError("M(n) requested outside 1.." + std::to_string(limit));
    if (n == limit) return final_value;
    if (n % stride != 0) throw UsageError("n = " + std::to_string(n) + " is not a checkpoint");
    return checkpoints[n / stride - 1];
}

MertensSeries mertens(std::uint64_t limit, const MertensOptions& options) {
    require_limit(limit);
    if (options.stride == 0) throw UsageError("stride must be at least 1");
    for (double e : options.track_epsilons) {
        if (!(e >= 0)) throw UsageError("epsilon must be non-negative");
    }
    MertensSeries series;
    series.limit = limit;
    series.stride = options.stride;
    series.checkpoints.reserve(limit / options.stride + 1);
    for (double e : options.track_epsilons) series.tracked.push_back({e, 0.0, 0});

    std::vector<double> exponents;
    for (double e : options.track_epsilons) exponents.push_back(-(0.5 + e));

    std::int64_t m = 0;
    series.min = series.max = 1;
    series.argmin = series.argmax = 1;
    for_each_mobius_segment(limit, options.sieve, [&](std::uint64_t first, std::span<const std::int8_t> mu) {
        for (std::size_t i = 0; i < mu.size(); ++i) {
            const std::uint64_t n = first + i;
            m += mu[i];
            if (mu[i] != 0) ++series.squarefree_count;
            if (m < series.min) series.min = m, series.argmin = n;
            if (m > series.max) series.max = m, series.argmax = n;
            if (n % options.stride == 0 || n == limit) series.checkpoints.push_back(static_cast<std::int32_t>(m));
            if (n >= 2 && m != 0) {
                const double am = static_cast<double>(m < 0 ? -m : m);
                for (std::size_t e = 0; e < exponents.size(); ++e) {
                    const double stat = am * std::pow(static_cast<double>(n), exponents[e]);
                    if (stat > series.tracked[e].sup_statistic) {
                        series.tracked[e].sup_statistic = stat;
                        series.tracked[e].argmax_n = n;
                    }
                }
            }
        }
    });
    series.final_value = m;
    return series;
}

GrowthReport growth_statistic(const MertensSeries& series, double epsilon) {
    if (!(epsilon >= 0)) throw UsageError("epsilon must be non-negative");
    if (series.stride != 1) {
        for (const auto& g : series.tracked) {
            if (g.epsilon == epsilon) return g;
        }
        throw UsageError("series keeps only checkpoints; track this epsilon when building it");
    }
    GrowthReport report{epsilon, 0.0, 0};
    const double exponent = -(0.5 + epsilon);
    for (std::uint64_t n = 2; n <= series.limit; ++n) {
        const std::int64_t m = series.checkpoints[n - 1];
        if (m == 0) continue;
        const double stat = static_cast<double>(m < 0 ? -m : m) * std::pow(static_cast<double>(n), exponent);
        if (stat > report.sup_statistic) {
            report.sup_statistic = stat;
            report.argmax_n = n;
        }
    }
    return report;
}

WalkComparison random_walk_compare(std::uint64_t limit, std::uint64_t trials, std::uint64_t seed,
                                   unsigned workers) {
    if (trials == 0) throw UsageError("random_walk_compare: trials must be at least 1");
    MertensOptions opt;
    opt.stride = limit;
    opt.track_epsilons = {0.0};
    opt.sieve.workers = workers;
    const MertensSeries series = mertens(limit, opt);

    WalkComparison out;
    out.limit = limit;
    out.walk_length = series.squarefree_count;
    out.trials = trials;
    out.mertens_statistic = series.tracked[0].sup_statistic;

    std::vector<double> stats(trials);
    std::vector<std::int64_t> finals(trials);
    parallel_for(trials, workers, [&](std::size_t t) {
        auto rng = substream(seed, t);
        std::int64_t w = 0;
        double sup = 0.0;
        std::uint64_t word = 0;
        for (std::uint64_t n = 1; n <= out.walk_length; ++n) {
            if ((n - 1) % 64 == 0) word = rng();
            w += (word & 1) ? 1 : -1;
            word >>= 1;
            if (n >= 2) {
                const double stat = static_cast<double>(w < 0 ? -w : w) / std::sqrt(static_cast<double>(n));
                sup = std::max(sup, stat);
            }
        }
        stats[t] = sup;
        finals[t] = w;
    });

    const double n = static_cast<double>(trials);
    double sum = 0, sum_sq = 0, fsum = 0, fsum_sq = 0;
    std::uint64_t at_or_below = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        sum += stats[t];
        sum_sq += stats[t] * stats[t];
        fsum += static_cast<double>(finals[t]);
        fsum_sq += static_cast<double>(finals[t]) * static_cast<double>(finals[t]);
        if (stats[t] <= out.mertens_statistic) ++at_or_below;
    }
    out.walk_statistic_mean = sum / n;
    out.final_position_mean = fsum / n;
    if (trials > 1) {
        out.walk_statistic_sd = std::sqrt(std::max(0.0, (sum_sq - sum * sum / n) / (n - 1)));
        const double fvar = std::max(0.0, (fsum_sq - fsum * fsum / n) / (n - 1));
        out.final_position_std_error = std::sqrt(fvar / n);
    }
    out.percentile_rank = static_cast<double>(at_or_below) / n;
    return out;
}

}  // namespace ntw
