#include <doctest.h>

#include <cmath>

#include "resilife/montecarlo.hpp"
#include "resilife/special.hpp"

using namespace resilife;

TEST_CASE("ks statistic against the generating distribution") {
    auto e = exponential(1.0);
    auto s = e.sample(100000, 31);
    const double d = ks_statistic(s, [&e](double x) { return e.sf(x); });
    CHECK(d < ks_threshold(100000));
}

TEST_CASE("ks statistic on a single median sample") {
    CHECK(ks_statistic({std::log(2.0)}, [](double x) { return std::exp(-x); }) ==
          doctest::Approx(0.5));
}

TEST_CASE("ks statistic separates distinct distributions") {
    auto s = exponential(2.0).sample(10000, 17);
    const double d = ks_statistic(s, [](double x) { return std::exp(-x); });
    CHECK(d > 0.1);
}

TEST_CASE("spacing replications are reproducible and nonnegative") {
    auto a = mc_spacings(exponential(1.0), 5, 2000, 5);
    auto b = mc_spacings(exponential(1.0), 5, 2000, 5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].spacing == b[i].spacing);
        CHECK(a[i].penultimate == b[i].penultimate);
        CHECK(a[i].spacing >= 0.0);
        CHECK(a[i].penultimate >= 0.0);
    }
    auto c = mc_spacings(exponential(1.0), 5, 2000, 6);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i) any_diff = any_diff || a[i].spacing != c[i].spacing;
    CHECK(any_diff);
}

TEST_CASE("k-out-of-n residual engine basics") {
    McConfig cfg{exponential(1.0), 5, 3, 2000, 9};
    auto r1 = mc_k_out_n_residuals(cfg);
    auto r2 = mc_k_out_n_residuals(cfg);
    CHECK(r1 == r2);
    for (double v : r1) CHECK(v >= 0.0);
    CHECK_THROWS_AS((void)mc_k_out_n_residuals(McConfig{exponential(1.0), 5, 5, 2000, 9}),
                    std::invalid_argument);
}

TEST_CASE("two-sample ks statistic") {
    auto a = exponential(1.0).sample(20000, 3);
    auto b = exponential(1.0).sample(20000, 4);
    CHECK(ks_two_sample(a, b) < 0.02);
    auto c = exponential(2.0).sample(20000, 5);
    CHECK(ks_two_sample(a, c) > 0.1);
}

TEST_CASE("chi-squared independence on synthetic pairs") {
    std::vector<std::pair<double, double>> dependent, independent;
    std::mt19937_64 gen(77);
    auto u = [&gen] { return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53; };
    for (int i = 0; i < 20000; ++i) {
        const double a = u(), b = u();
        dependent.emplace_back(a, a);
        independent.emplace_back(a, b);
    }
    CHECK(independence_check(dependent).rejected);
    CHECK_FALSE(independence_check(independent).rejected);
    CHECK_THROWS_AS((void)independence_check({{1.0, 2.0}}), std::invalid_argument);
    std::vector<std::pair<double, double>> degenerate(20000, {1.0, 1.0});
    CHECK_THROWS_AS((void)independence_check(degenerate), std::invalid_argument);
}

TEST_CASE("special function plumbing") {
    // regularized gamma against erf: P(1/2, x) = erf(sqrt(x))
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0})
        CHECK(gamma_p(0.5, x) == doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-10));
    for (double x : {0.2, 2.0, 30.0})
        CHECK(gamma_p(2.5, x) + gamma_q(2.5, x) == doctest::Approx(1.0).epsilon(1e-12));
    // unnormalized upper gamma: Gamma(2, 1) = 2/e, and consistency with Q
    CHECK(std::exp(log_upper_gamma(2.0, 1.0)) ==
          doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-10));
    for (double x : {0.5, 5.0, 40.0})
        CHECK(log_upper_gamma(1.7, x) ==
              doctest::Approx(std::log(gamma_q(1.7, x)) + std::lgamma(1.7)).epsilon(1e-10));
    // stays finite deep in the tail, asymptotically -z + (a-1) ln z
    const double lg = log_upper_gamma(0.5, 2000.0);
    CHECK(std::isfinite(lg));
    CHECK(lg == doctest::Approx(-2000.0 - 0.5 * std::log(2000.0)).epsilon(1e-3));
    // chi-squared quantile near the tabulated 99th percentile at 81 df
    CHECK(chi_squared_quantile(0.99, 81) == doctest::Approx(113.51).epsilon(1e-3));
    CHECK(log_binomial(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-12));
}
