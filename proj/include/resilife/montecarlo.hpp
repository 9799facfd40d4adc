#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distributions.hpp"
#include "special.hpp"

namespace resilife {

struct SpacingSample {
    double penultimate; // x_{n-1:n}, the random age of the survivor
    double spacing;     // x_{n:n} - x_{n-1:n}
};

namespace detail {

inline double next_uniform(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

// Stable 64-bit FNV-1a, used to derive per-scenario seeds from a master seed.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace detail

// N replications of (x_{n-1:n}, x_{n:n} - x_{n-1:n}) from iid baseline draws.
inline std::vector<SpacingSample> mc_spacings(const LifetimeDistribution& baseline, int n,
                                              std::size_t N, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("mc_spacings: need n >= 2");
    if (N < 1000) throw std::invalid_argument("mc_spacings: need at least 10^3 replications");
    std::mt19937_64 gen(seed);
    std::vector<SpacingSample> out;
    out.reserve(N);
    std::vector<double> draw(n);
    for (std::size_t rep = 0; rep < N; ++rep) {
        for (int i = 0; i < n; ++i) draw[i] = baseline.quantile(detail::next_uniform(gen));
        std::sort(draw.begin(), draw.end());
        out.push_back(SpacingSample{draw[n - 2], draw[n - 1] - draw[n - 2]});
    }
    return out;
}

struct McConfig {
    LifetimeDistribution baseline;
    int n = 5;
    int k = 1;
    std::size_t sample_count = 100000;
    std::uint64_t seed = 0;
};

// Residual life of one randomly chosen survivor after the kth failure among n
// iid components.
inline std::vector<double> mc_k_out_n_residuals(const McConfig& cfg) {
    if (!(1 <= cfg.k && cfg.k < cfg.n)) throw std::invalid_argument("mc_k_out_n_residuals: need 1 <= k < n");
    if (cfg.sample_count < 1000)
        throw std::invalid_argument("mc_k_out_n_residuals: need at least 10^3 replications");
    std::mt19937_64 gen(cfg.seed);
    std::vector<double> out;
    out.reserve(cfg.sample_count);
    std::vector<double> draw(cfg.n);
    const int survivors = cfg.n - cfg.k;
    for (std::size_t rep = 0; rep < cfg.sample_count; ++rep) {
        for (int i = 0; i < cfg.n; ++i) draw[i] = cfg.baseline.quantile(detail::next_uniform(gen));
        std::sort(draw.begin(), draw.end());
        const double t = draw[cfg.k - 1];
        auto pick = static_cast<int>(detail::next_uniform(gen) * survivors);
        pick = std::min(pick, survivors - 1);
        out.push_back(draw[cfg.k + pick] - t);
    }
    return out;
}

// One-sample Kolmogorov-Smirnov statistic of `samples` against the survival
// function `sf`: sup over the sorted sample of |empirical sf - sf|.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& sf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: samples must be nonempty");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double s = sf(samples[i]);
        const double above = (n - static_cast<double>(i)) / n;       // just left of the jump
        const double below = (n - static_cast<double>(i) - 1.0) / n; // at and right of it
        d = std::fmax(d, std::fmax(std::fabs(s - above), std::fabs(s - below)));
    }
    return d;
}

// Two-sample KS statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: samples must be nonempty");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::fmax(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

// KS acceptance threshold: 95% asymptotic critical value with slack for the
// quadrature error of the reference sf.
inline double ks_threshold(std::size_t N) { return 1.36 / std::sqrt(static_cast<double>(N)) * 1.5; }

struct IndependenceResult {
    double statistic = 0.0;
    double critical_value = 0.0;
    int bins = 0;
    int dof = 0;
    bool rejected = false;
};

// Chi-squared independence test on a bins x bins quantile partition of the
// two marginals, at significance level alpha.
inline IndependenceResult independence_check(const std::vector<std::pair<double, double>>& pairs,
                                             int bins = 10, double alpha = 0.01) {
    if (pairs.size() < 10000) throw std::invalid_argument("independence_check: need at least 10^4 pairs");
    if (bins < 2) throw std::invalid_argument("independence_check: need at least 2 bins");
    const std::size_t N = pairs.size();
    std::vector<double> xs(N), ys(N);
    for (std::size_t i = 0; i < N; ++i) {
        xs[i] = pairs[i].first;
        ys[i] = pairs[i].second;
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    auto edges = [N, bins](const std::vector<double>& sorted) {
        std::vector<double> e(bins - 1);
        for (int b = 1; b < bins; ++b) {
            const auto idx = static_cast<std::size_t>(static_cast<double>(N) * b / bins);
            e[b - 1] = sorted[std::min(idx, N - 1)];
        }
        for (std::size_t i = 1; i < e.size(); ++i)
            if (!(e[i] > e[i - 1]))
                throw std::invalid_argument("independence_check: degenerate marginal (tied quantiles)");
        return e;
    };
    const auto ex = edges(xs), ey = edges(ys);
    auto bucket = [bins](const std::vector<double>& e, double v) {
        int b = 0;
        while (b < bins - 1 && v > e[b]) ++b;
        return b;
    };
    std::vector<std::vector<double>> obs(bins, std::vector<double>(bins, 0.0));
    for (const auto& [x, y] : pairs) obs[bucket(ex, x)][bucket(ey, y)] += 1.0;
    std::vector<double> row(bins, 0.0), col(bins, 0.0);
    for (int i = 0; i < bins; ++i)
        for (int j = 0; j < bins; ++j) {
            row[i] += obs[i][j];
            col[j] += obs[i][j];
        }
    IndependenceResult r;
    r.bins = bins;
    r.dof = (bins - 1) * (bins - 1);
    for (int i = 0; i < bins; ++i)
        for (int j = 0; j < bins; ++j) {
            const double expected = row[i] * col[j] / static_cast<double>(N);
            if (expected > 0.0) {
                const double diff = obs[i][j] - expected;
                r.statistic += diff * diff / expected;
            }
        }
    r.critical_value = chi_squared_quantile(1.0 - alpha, r.dof);
    r.rejected = r.statistic > r.critical_value;
    return r;
}

} // namespace resilife
