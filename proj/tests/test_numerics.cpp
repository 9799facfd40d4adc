#include <doctest.h>

#include <cmath>
#include <random>

#include "resilife/distributions.hpp"
#include "resilife/numerics.hpp"

using namespace resilife;

TEST_CASE("semi-infinite quadrature on reference integrals") {
    auto r = integrate_semi_infinite([](double t) { return std::exp(-t); });
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.error_estimate <= 1e-9 * r.value + 1e-12);

    // inner integral of a squared-exponent baseline with exponential ages,
    // evaluated at x = 0.5: closed form 1/(10 * 0.5 + 1)
    auto r2 = integrate_semi_infinite([](double t) { return std::exp(-6.0 * t); });
    CHECK(r2.value == doctest::Approx(1.0 / 6.0).epsilon(1e-10));

    auto r3 = integrate_semi_infinite([](double t) { return 2.0 / (M_PI * (1.0 + t * t)); });
    CHECK(r3.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("finite quadrature") {
    CHECK(integrate_finite([](double) { return 1.0; }, 0.0, 1.0).value == doctest::Approx(1.0));
    CHECK(integrate_finite([](double t) { return std::exp(-t); }, 0.0, 20.0).value ==
          doctest::Approx(1.0 - std::exp(-20.0)).epsilon(1e-10));
    CHECK(integrate_finite([](double t) { return 2.0 * t; }, 0.0, 1.0).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_finite([](double) { return 5.0; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("built-in densities integrate to one") {
    for (const auto& d : {exponential(1.0), exponential(2.0), weibull(2.0, 1.0),
                          weibull(0.7, 2.0), hyper_exponential({0.25, 0.75}, {1.0, 2.0}),
                          log_logistic(2.0, 1.0), half_cauchy(1.0), cauchy_squared(1.0),
                          order_statistic(exponential(1.0), 4, 5)}) {
        auto r = integrate_semi_infinite([&d](double t) { return d.pdf(t); });
        CHECK_MESSAGE(r.value == doctest::Approx(1.0).epsilon(1e-8), d.label());
    }
}

TEST_CASE("quadrature is additive across a split point") {
    auto exp_pdf = [](double t) { return std::exp(-t); };
    auto wei_pdf = [](double t) { return 2.0 * t * std::exp(-t * t); };
    for (double c : {0.5, 1.0, 5.0}) {
        for (auto f : {+exp_pdf, +wei_pdf}) {
            const double whole = integrate_semi_infinite(f).value;
            const double head = integrate_finite(f, 0.0, c).value;
            const double tail = integrate_semi_infinite([f, c](double t) { return f(c + t); }).value;
            CHECK(whole == doctest::Approx(head + tail).epsilon(1e-9));
        }
    }
}

TEST_CASE("quadrature error paths") {
    CHECK_THROWS_AS((void)integrate_semi_infinite(
                        [](double t) { return t > 1.0 && t < 2.0 ? std::nan("") : std::exp(-t); }),
                    EvaluationError);
    // not absolutely integrable: refinement cannot reach the tolerance
    CHECK_THROWS_AS((void)integrate_semi_infinite([](double t) { return 1.0 / (1.0 + t); }),
                    QuadratureError);
    try {
        (void)integrate_semi_infinite([](double t) { return 1.0 / (1.0 + t); });
    } catch (const QuadratureError& e) {
        CHECK(e.partial_estimate > 1.0);
        CHECK(e.evaluations > 100);
    }
}

TEST_CASE("find_sign_change brackets a root") {
    auto g = Grid::uniform(0.0, 2.0, 101);
    auto bracket = find_sign_change([](double x) { return x - 1.0; }, g);
    REQUIRE(bracket.has_value());
    CHECK(bracket->lo <= 1.0);
    CHECK(bracket->hi >= 1.0);
    CHECK(bracket->f_lo * bracket->f_hi < 0.0);

    CHECK_FALSE(find_sign_change([](double x) { return std::exp(-x); },
                                 Grid::uniform(0.0, 10.0, 101))
                    .has_value());
}

TEST_CASE("find_sign_change bracket endpoints always have opposite signs") {
    std::mt19937 gen(1234);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const auto grid = Grid::uniform(0.0, 5.0, 57);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = coef(gen), b = coef(gen), c = coef(gen), d = coef(gen);
        auto poly = [a, b, c, d](double x) { return ((a * x + b) * x + c) * x + d; };
        auto bracket = find_sign_change(poly, grid);
        if (bracket) {
            CHECK(bracket->f_lo * bracket->f_hi < 0.0);
            CHECK(poly(bracket->lo) * poly(bracket->hi) < 0.0);
        }
    }
}

TEST_CASE("is_monotone") {
    CHECK(is_monotone({1.0, 2.0, 3.0}, Direction::Increasing, 0.0).holds);
    auto v = is_monotone({1.0, 2.0, 1.5}, Direction::Increasing, 0.0);
    CHECK_FALSE(v.holds);
    REQUIRE(v.first_violation.has_value());
    CHECK(*v.first_violation == 2);
    CHECK(v.max_violation == doctest::Approx(0.5));
    CHECK(is_monotone({1.0, 1.0 - 1e-12, 2.0}, Direction::Increasing, 1e-9).holds);
    CHECK(is_monotone({3.0, 2.0, 2.0}, Direction::Decreasing, 0.0).holds);
    CHECK_THROWS_AS((void)is_monotone({1.0}, Direction::Increasing, 0.0), std::invalid_argument);
}

TEST_CASE("grids") {
    auto u = Grid::uniform(0.5, 2.0, 7).abscissas();
    CHECK(u.front() == 0.5);
    CHECK(u.back() == 2.0);
    for (std::size_t i = 1; i < u.size(); ++i) CHECK(u[i] > u[i - 1]);
    auto g = Grid::geometric(1e-3, 10.0, 11).abscissas();
    CHECK(g.front() == 1e-3);
    CHECK(g.back() == 10.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK_THROWS_AS(Grid::geometric(0.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Grid::uniform(1.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Grid::uniform(0.0, 1.0, 2), std::invalid_argument);
}
