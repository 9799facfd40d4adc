#include <doctest.h>

#include <cmath>

#include "resilife/mixing.hpp"

using namespace resilife;

TEST_CASE("expectation functional per variant") {
    CHECK(MixingDistribution::degenerate(1.0).expect([](double t) { return t; }) ==
          doctest::Approx(1.0));

    auto atoms = MixingDistribution::atoms({{0.0, 0.25}, {1.0, 0.75}});
    const double v = atoms.expect([](double t) { return std::exp(-t); });
    CHECK(v == 0.25 + 0.75 * std::exp(-1.0)); // exact sum, no quadrature error

    auto cont = MixingDistribution::continuous(exponential(1.0));
    CHECK(cont.expect([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("partial and tail expectations") {
    auto atoms = MixingDistribution::atoms({{0.0, 0.25}, {1.0, 0.75}});
    CHECK(atoms.expect_below([](double) { return 1.0; }, 0.5) == doctest::Approx(0.25));
    CHECK(atoms.expect_below([](double) { return 1.0; }, 1.0) == doctest::Approx(1.0));
    CHECK(atoms.expect_tail([](double) { return 1.0; }, 1.0) == doctest::Approx(0.75));
    CHECK(atoms.expect_tail([](double) { return 1.0; }, 1.0 + 1e-12) == doctest::Approx(0.0));

    auto cont = MixingDistribution::continuous(exponential(2.0));
    const double head = cont.expect_below([](double t) { return t; }, 1.0);
    const double tail = cont.expect_tail([](double t) { return t; }, 1.0);
    CHECK(head + tail == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("mixing cdf, sf and quantile") {
    auto atoms = MixingDistribution::atoms({{0.5, 0.25}, {1.5, 0.75}});
    CHECK(atoms.cdf(0.4) == 0.0);
    CHECK(atoms.cdf(0.5) == doctest::Approx(0.25));
    CHECK(atoms.sf(0.5) == doctest::Approx(0.75));
    CHECK(atoms.cdf(2.0) == doctest::Approx(1.0));
    CHECK(atoms.quantile(0.2) == 0.5);
    CHECK(atoms.quantile(0.9) == 1.5);
    CHECK(MixingDistribution::degenerate(2.0).quantile(0.99) == 2.0);
    CHECK_THROWS_AS((void)atoms.pdf(0.5), std::domain_error);

    auto os = MixingDistribution::order_statistic(exponential(1.0), 4, 5);
    CHECK(os.cdf(os.quantile(0.3)) == doctest::Approx(0.3).epsilon(1e-8));
}

TEST_CASE("order statistic cdf") {
    auto e = exponential(1.0);
    for (double t : {0.2, 1.0, 2.5}) {
        CHECK(os_cdf(e, 1, 1, t) == doctest::Approx(e.cdf(t)).epsilon(1e-12));
        CHECK(os_cdf(e, 5, 5, t) == doctest::Approx(std::pow(e.cdf(t), 5)).epsilon(1e-10));
    }
    // median of the 4th of 5, located by bisection on the cdf
    double lo = 0.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (os_cdf(e, 4, 5, mid) < 0.5 ? lo : hi) = mid;
    }
    CHECK(os_cdf(e, 4, 5, 0.5 * (lo + hi)) == doctest::Approx(0.5).epsilon(1e-9));

    // monotone in t, and higher order statistics are stochastically larger
    double prev = 0.0;
    for (double t = 0.1; t <= 6.0; t += 0.1) {
        const double c = os_cdf(e, 4, 5, t);
        CHECK(c >= prev);
        CHECK(os_cdf(e, 4, 5, t) <= os_cdf(e, 3, 5, t) + 1e-12);
        prev = c;
    }
}

TEST_CASE("order statistic pdf") {
    auto e = exponential(1.0);
    for (double t : {0.2, 1.0, 2.5})
        CHECK(os_pdf(e, 1, 1, t) == doctest::Approx(e.pdf(t)).epsilon(1e-12));

    auto r = integrate_semi_infinite([&e](double t) { return os_pdf(e, 4, 5, t); });
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));

    const double median = e.quantile(0.5);
    CHECK(os_pdf(e, 5, 5, median) ==
          doctest::Approx(5.0 * std::pow(0.5, 4) * e.pdf(median)).epsilon(1e-10));
}

TEST_CASE("order statistic mixing normalizes") {
    auto os = MixingDistribution::order_statistic(exponential(1.0), 4, 5);
    CHECK(os.expect([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-8));
    auto osw = MixingDistribution::order_statistic(weibull(2.0, 1.0), 2, 5);
    CHECK(osw.expect([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(MixingDistribution::atoms({{1.0, 0.5}, {0.5, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(MixingDistribution::atoms({{0.0, 0.5}, {1.0, 0.6}}), std::invalid_argument);
    CHECK_THROWS_AS(MixingDistribution::atoms({}), std::invalid_argument);
    CHECK_THROWS_AS(MixingDistribution::degenerate(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(MixingDistribution::order_statistic(exponential(1.0), 6, 5),
                    std::invalid_argument);
}
