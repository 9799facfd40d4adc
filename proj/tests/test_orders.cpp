#include <doctest.h>

#include <cmath>

#include "resilife/mixture.hpp"
#include "resilife/orders.hpp"

using namespace resilife;

TEST_CASE("usual stochastic order on exponentials") {
    auto v = check_order(make_view(exponential(2.0)), make_view(exponential(1.0)), OrderKind::ST);
    CHECK(v.holds);
    auto rev = check_order(make_view(exponential(1.0)), make_view(exponential(2.0)), OrderKind::ST);
    CHECK_FALSE(rev.holds);
    CHECK(rev.witness_x.has_value());
}

TEST_CASE("likelihood ratio order of the heavy-tailed age pair") {
    auto h1 = MixingDistribution::continuous(cauchy_squared(1.0));
    auto h2 = MixingDistribution::continuous(half_cauchy(1.0));
    CHECK(check_order(make_view(h1), make_view(h2), OrderKind::LR).holds);
    CHECK_FALSE(check_order(make_view(h2), make_view(h1), OrderKind::LR).holds);
}

TEST_CASE("reflexivity of every order kind") {
    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    auto v = make_view(he);
    for (auto k : {OrderKind::LR, OrderKind::HR, OrderKind::RH, OrderKind::ST, OrderKind::MRL,
                   OrderKind::AI})
        CHECK_MESSAGE(check_order(v, v, k).holds, to_string(k));
    const auto tg = Grid::uniform(1e-3, 10.0, 40);
    const auto xg = Grid::uniform(0.0, 4.0, 9);
    for (auto k : {OrderKind::UP_LR, OrderKind::UP_HR, OrderKind::UP_MRL}) {
        // X vs X in an up-shifted order needs the ratio q(t+x)/q(t) to fall in
        // t, which holds for log-concave quantities; the hyperexp family is
        // log-convex, so reflexivity is only exact at x = 0.
        auto r = check_upshifted_order(v, v, k, tg, Grid::uniform(0.0, 1e-9, 3));
        CHECK_MESSAGE(r.holds, to_string(k));
    }
}

TEST_CASE("AI order breaks for the decreasing non-log-concave hazard") {
    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    ResidualMixture mx(he, MixingDistribution::degenerate(1.0));
    auto v = check_order(make_view(he), make_view(mx), OrderKind::AI);
    CHECK_FALSE(v.holds);
    CHECK(v.witness_x.has_value());
    CHECK(v.max_violation > 1e-4);
}

TEST_CASE("AI order holds for the two-atom squared-exponent mixture") {
    // the cumulative-hazard ratio t^2 / (t^2 + ln 4 - ln(1 + 3 e^{-2t})) is
    // strictly increasing, so the comparison holds on any grid
    auto w2 = weibull_sq_exponent(1.0);
    ResidualMixture mx(w2, MixingDistribution::atoms({{0.0, 0.25}, {1.0, 0.75}}));
    auto v = check_order(make_view(w2), make_view(mx), OrderKind::AI);
    CHECK(v.holds);
    auto fine = check_order(make_view(w2), make_view(mx), OrderKind::AI,
                            Grid::geometric(1e-4, 50.0, 2000), 1e-12);
    CHECK(fine.holds);
}

TEST_CASE("up-shifted orders for the log-concave baseline") {
    auto w2 = weibull_sq_exponent(1.0);
    ResidualMixture mx(w2, MixingDistribution::atoms({{0.0, 0.25}, {1.0, 0.75}}));
    const auto tg = Grid::uniform(1e-3, 10.0, 60);
    const auto xg = Grid::uniform(0.0, 5.0, 20);
    for (auto k : {OrderKind::UP_LR, OrderKind::UP_HR, OrderKind::UP_MRL})
        CHECK_MESSAGE(check_upshifted_order(make_view(mx), make_view(w2), k, tg, xg).holds,
                      to_string(k));

    // memoryless baseline: the ratio is constant in t
    ResidualMixture me(exponential(1.0), MixingDistribution::continuous(exponential(1.0)));
    auto r = check_upshifted_order(make_view(me), make_view(exponential(1.0)), OrderKind::UP_LR, tg,
                                   xg, 1e-6);
    CHECK(r.holds);
}

TEST_CASE("order implication chain across object pairs") {
    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    auto mexp = MixingDistribution::continuous(exponential(1.0));
    std::vector<std::pair<DistributionView, DistributionView>> pairs;
    pairs.emplace_back(make_view(exponential(2.0)), make_view(exponential(1.0)));
    pairs.emplace_back(make_view(exponential(1.0)),
                       make_view(hyper_exponential({0.25, 0.75}, {0.5, 1.0})));
    pairs.emplace_back(make_view(ResidualMixture(he, MixingDistribution::continuous(exponential(2.0)))),
                       make_view(ResidualMixture(he, mexp)));
    pairs.emplace_back(make_view(he), make_view(ResidualMixture(he, MixingDistribution::degenerate(1.0))));
    for (const auto& [X, Y] : pairs) {
        const bool lr = check_order(X, Y, OrderKind::LR, default_check_grid(), 1e-5).holds;
        const bool hr = check_order(X, Y, OrderKind::HR, default_check_grid(), 1e-6).holds;
        const bool st = check_order(X, Y, OrderKind::ST, default_check_grid(), 1e-6).holds;
        const bool mrl = check_order(X, Y, OrderKind::MRL, default_check_grid(), 1e-6).holds;
        if (lr) CHECK(hr);
        if (hr) CHECK(st);
        if (hr) CHECK(mrl);
    }
}

TEST_CASE("crossing survival functions fail ST both ways and straddle the crossing") {
    // e^{-x^2} vs e^{-x}: the sfs cross exactly at x = 1
    auto w2 = weibull_sq_exponent(1.0);
    auto e1 = exponential(1.0);
    const auto grid = Grid::uniform(1e-3, 6.0, 200);
    auto fwd = check_order(make_view(w2), make_view(e1), OrderKind::ST, grid, 1e-9);
    auto bwd = check_order(make_view(e1), make_view(w2), OrderKind::ST, grid, 1e-9);
    CHECK_FALSE(fwd.holds);
    CHECK_FALSE(bwd.holds);
    auto bracket = find_sign_change([&](double x) { return w2.sf(x) - e1.sf(x); }, grid);
    REQUIRE(bracket.has_value());
    REQUIRE(fwd.witness_x.has_value());
    REQUIRE(bwd.witness_x.has_value());
    // the two violation witnesses sit on opposite sides of the crossing
    CHECK(*fwd.witness_x <= bracket->lo);
    CHECK(*bwd.witness_x >= bracket->hi);
}

TEST_CASE("denominator exclusions lead to inconclusive verdicts") {
    // mrl of the squared-exponent mixture is unavailable past the underflow
    // guard, so most of the default grid drops out
    auto w5 = weibull_sq_exponent(5.0);
    ResidualMixture mx(w5, MixingDistribution::continuous(exponential(1.0)));
    auto v = check_order(make_view(mx), make_view(w5), OrderKind::MRL, default_check_grid(), 1e-6);
    CHECK(v.inconclusive);
    CHECK(v.excluded_points > 40);
}

TEST_CASE("missing quantities are reported") {
    auto emp = make_view(empirical({0.5, 1.0, 2.0}));
    auto e = make_view(exponential(1.0));
    CHECK_THROWS_AS((void)check_order(emp, e, OrderKind::LR), std::invalid_argument);
    CHECK_THROWS_AS((void)check_order(e, e, OrderKind::UP_LR), std::invalid_argument);
    CHECK_THROWS_AS((void)check_upshifted_order(e, e, OrderKind::ST, default_check_grid(),
                                                default_check_grid()),
                    std::invalid_argument);
}
