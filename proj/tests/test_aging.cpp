#include <doctest.h>

#include <cmath>

#include "resilife/aging.hpp"
#include "resilife/mixture.hpp"

using namespace resilife;

TEST_CASE("hazard-direction classes on the stock families") {
    auto w2 = weibull_sq_exponent(1.0);
    const auto wgrid = Grid::uniform(1e-3, 6.0, 200);
    CHECK(check_aging_class(make_view(w2), AgingClass::IFR, wgrid).holds);
    auto dfr = check_aging_class(make_view(w2), AgingClass::DFR, wgrid);
    CHECK_FALSE(dfr.holds);
    CHECK(dfr.witness_x.has_value());

    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    CHECK(check_aging_class(make_view(he), AgingClass::DFR).holds);
    CHECK_FALSE(check_aging_class(make_view(he), AgingClass::IFR).holds);

    auto ll = log_logistic(2.0, 1.0);
    CHECK_FALSE(check_aging_class(make_view(ll), AgingClass::IFR).holds);
    CHECK_FALSE(check_aging_class(make_view(ll), AgingClass::DFR).holds);

    auto e = exponential(1.0);
    CHECK(check_aging_class(make_view(e), AgingClass::IFR).holds);
    CHECK(check_aging_class(make_view(e), AgingClass::DFR).holds);
}

TEST_CASE("the exponential-age squared-exponent mixture loses DMRL") {
    ResidualMixture mx(weibull_sq_exponent(5.0), MixingDistribution::continuous(exponential(1.0)));
    auto v = check_aging_class(make_view(mx), AgingClass::DMRL, Grid::uniform(1e-3, 2.0, 400));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness_x.has_value());
    CHECK(*v.witness_x < 0.05); // the mrl is already rising next to the origin
}

TEST_CASE("log-concavity classification") {
    CHECK(check_log_concavity([](double t) { return std::exp(-t); }).curvature == Curvature::Both);
    CHECK(check_log_concavity([](double t) { return std::exp(-t * t); }).curvature ==
          Curvature::LogConcave);
    CHECK(check_log_concavity([](double t) { return std::exp(t * t); }).curvature ==
          Curvature::LogConvex);
    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    // decreasing hazard that switches curvature: concave near zero, convex in
    // the tail
    auto cv = check_log_concavity([he](double t) { return he.hazard(t); });
    CHECK(cv.curvature == Curvature::Neither);
    CHECK(cv.concavity_witness.has_value());
    CHECK(cv.convexity_witness.has_value());
}

TEST_CASE("density-shape classes") {
    const auto wgrid = Grid::uniform(1e-3, 6.0, 200);
    CHECK(check_aging_class(make_view(weibull_sq_exponent(1.0)), AgingClass::ILR, wgrid).holds);
    CHECK_FALSE(check_aging_class(make_view(weibull_sq_exponent(1.0)), AgingClass::DLR, wgrid).holds);
    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    CHECK(check_aging_class(make_view(he), AgingClass::DLR).holds);
    CHECK_FALSE(check_aging_class(make_view(he), AgingClass::ILR).holds);
    auto ll = log_logistic(2.0, 1.0);
    CHECK_FALSE(check_aging_class(make_view(ll), AgingClass::ILR).holds);
    CHECK_FALSE(check_aging_class(make_view(ll), AgingClass::DLR).holds);
}

TEST_CASE("used-vs-new classes") {
    const auto g = Grid::uniform(1e-3, 5.0, 60);
    CHECK(check_aging_class(make_view(weibull_sq_exponent(1.0)), AgingClass::NBU, g).holds);
    auto nwu = check_aging_class(make_view(weibull_sq_exponent(1.0)), AgingClass::NWU, g);
    CHECK_FALSE(nwu.holds);
    CHECK(nwu.witness_xy.has_value());
    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    CHECK(check_aging_class(make_view(he), AgingClass::NWU, g).holds);
    CHECK_FALSE(check_aging_class(make_view(he), AgingClass::NBU, g).holds);
    // boundary: the memoryless family is both, with equality
    auto e = make_view(exponential(1.0));
    CHECK(check_aging_class(e, AgingClass::NBU, g).holds);
    CHECK(check_aging_class(e, AgingClass::NWU, g).holds);
}

TEST_CASE("expectation classes") {
    const auto wgrid = Grid::uniform(1e-3, 6.0, 200);
    CHECK(check_aging_class(make_view(weibull_sq_exponent(1.0)), AgingClass::NBUE, wgrid).holds);
    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    CHECK(check_aging_class(make_view(he), AgingClass::NWUE).holds);
    CHECK_FALSE(check_aging_class(make_view(he), AgingClass::NBUE).holds);
}

TEST_CASE("class implication chains hold across the families") {
    const auto wgrid = Grid::uniform(1e-3, 6.0, 200);
    // positive chain on the squared-exponent family
    auto w2 = make_view(weibull_sq_exponent(1.0));
    REQUIRE(check_aging_class(w2, AgingClass::ILR, wgrid).holds);
    CHECK(check_aging_class(w2, AgingClass::IFR, wgrid).holds);
    CHECK(check_aging_class(w2, AgingClass::DMRL, wgrid).holds);
    CHECK(check_aging_class(w2, AgingClass::NBUE, wgrid).holds);
    // negative chain on the hyperexponential family
    auto he = make_view(hyper_exponential({0.25, 0.75}, {1.0, 2.0}));
    REQUIRE(check_aging_class(he, AgingClass::DLR).holds);
    CHECK(check_aging_class(he, AgingClass::DFR).holds);
    CHECK(check_aging_class(he, AgingClass::IMRL).holds);
    CHECK(check_aging_class(he, AgingClass::NWUE).holds);
}

TEST_CASE("TP2 / RR2 classification of bivariate kernels") {
    const auto g = Grid::uniform(0.1, 3.0, 25);
    CHECK(check_tp2_rr2([](double x, double y) { return std::exp(x * y); }, g, g).cls ==
          Tp2Class::TP2);
    CHECK(check_tp2_rr2([](double x, double y) { return std::exp(-x * y); }, g, g).cls ==
          Tp2Class::RR2);
    // multiplicatively separable kernels are both
    CHECK(check_tp2_rr2([](double x, double y) { return std::exp(x) * std::exp(y); }, g, g).cls ==
          Tp2Class::Both);
    auto he = hyper_exponential({0.25, 0.75}, {1.0, 2.0});
    // sf(x + w) of a DFR baseline
    auto v = check_tp2_rr2([&he](double x, double w) { return he.sf(x + w); }, g, g);
    CHECK(v.cls == Tp2Class::TP2);
    CHECK_THROWS_AS(
        (void)check_tp2_rr2([](double x, double y) { return x - y; }, g, g), std::domain_error);
}
