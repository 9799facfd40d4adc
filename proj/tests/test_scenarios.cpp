#include <doctest.h>

#include <set>

#include "resilife/scenarios.hpp"

using namespace resilife;

TEST_CASE("catalog shape") {
    const auto& cat = catalog();
    CHECK(cat.size() >= 20);
    std::set<std::string> ids;
    for (const auto& s : cat) {
        CHECK(ids.insert(s.id).second); // unique ids
        CHECK_FALSE(s.description.empty());
    }
    CHECK(ids.count("CE5.1") == 1);
    CHECK(ids.count("T6.6") == 1);
    CHECK_THROWS_AS((void)run_scenario("nosuch"), std::invalid_argument);
}

TEST_CASE("counterexample scenarios report their breakdowns") {
    auto r51 = run_scenario("CE5.1");
    CHECK(r51.overall == "pass"); // the expected DMRL failure materializes
    bool found_dmrl = false;
    for (const auto& c : r51.conclusions)
        if (c.name.find("DMRL") != std::string::npos) {
            found_dmrl = true;
            CHECK_FALSE(c.holds);
            CHECK(c.expected == false);
        }
    CHECK(found_dmrl);
    CHECK(r51.artifacts.contains("mrl_0.002"));

    auto r42 = run_scenario("CE4.2");
    CHECK(r42.overall == "pass");
}

TEST_CASE("closure scenarios pass") {
    for (const char* id : {"T5.1", "T5.2", "T5.3", "T4.3i", "T6.2", "R4.1", "C4.2-analytic"}) {
        auto rep = run_scenario(id);
        CHECK_MESSAGE(rep.overall == "pass", id);
    }
}

TEST_CASE("monte carlo scenarios pass against their analytic oracles") {
    for (const char* id : {"R3.1", "E3.2"}) {
        auto rep = run_scenario(id);
        CHECK_MESSAGE(rep.overall == "pass", id);
        for (const auto& c : rep.conclusions) CHECK_MESSAGE(c.satisfied(), id, ": ", c.name);
    }
}

TEST_CASE("the computed outcome of CE4.1 differs from its source expectation") {
    // the cumulative-hazard ratio is strictly increasing, so the AI comparison
    // holds even though the scenario expects it to fail; everything else in
    // the scenario is satisfied
    auto rep = run_scenario("CE4.1");
    CHECK(rep.overall == "fail");
    int unsatisfied = 0;
    for (const auto& c : rep.conclusions)
        if (!c.satisfied()) {
            ++unsatisfied;
            CHECK(c.name.find("AI") != std::string::npos);
            CHECK(c.holds);
            CHECK_FALSE(c.expected);
        }
    for (const auto& c : rep.premises) CHECK(c.satisfied());
    CHECK(unsatisfied == 1);
}

TEST_CASE("the computed outcome of CE6.1 differs from its source expectation") {
    // computed: sf2* >= sf1* everywhere, so the sf difference never changes
    // sign, mixture1 <= mixture2 holds in ST and HR, and only the RH and LR
    // comparisons break in both directions
    auto rep = run_scenario("CE6.1");
    CHECK(rep.overall == "fail");
    std::set<std::string> unsatisfied;
    for (const auto& c : rep.conclusions)
        if (!c.satisfied()) unsatisfied.insert(c.name);
    CHECK(unsatisfied ==
          std::set<std::string>{"sf difference mixture2 - mixture1 changes sign",
                                "mixture1 <= mixture2 in ST fails",
                                "mixture1 <= mixture2 in HR fails"});
    for (const auto& c : rep.premises) CHECK(c.satisfied());
    // the density difference does change sign
    CHECK(rep.artifacts.contains("pdf_difference_sign_change"));
    // the reference closed form deviates from the quadrature values; the
    // partial-fraction form matches them
    CHECK(rep.artifacts["sf1_reference_formula_max_dev"].get<double>() > 1e-4);
    CHECK(rep.artifacts["sf1_partial_fraction_max_dev"].get<double>() < 1e-6);
}

TEST_CASE("reports are reproducible for a fixed seed") {
    ScenarioOptions opts;
    opts.master_seed = 4242;
    auto a = run_scenario("C4.2-mc", opts);
    auto b = run_scenario("C4.2-mc", opts);
    CHECK(a.artifacts["chi2_exponential"].get<double>() ==
          b.artifacts["chi2_exponential"].get<double>());
    CHECK(a.seed == b.seed);
    ScenarioOptions other;
    other.master_seed = 4243;
    auto c = run_scenario("C4.2-mc", other);
    CHECK(a.artifacts["chi2_exponential"].get<double>() !=
          c.artifacts["chi2_exponential"].get<double>());
}

TEST_CASE("report json round trip") {
    auto rep = run_scenario("T4.2iv");
    const auto j = to_json(rep);
    const auto back = report_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.overall == rep.overall);
    CHECK(back.premises.size() == rep.premises.size());
    CHECK(back.conclusions.size() == rep.conclusions.size());
    for (std::size_t i = 0; i < rep.conclusions.size(); ++i) {
        CHECK(back.conclusions[i].name == rep.conclusions[i].name);
        CHECK(back.conclusions[i].holds == rep.conclusions[i].holds);
        CHECK(back.conclusions[i].max_violation == rep.conclusions[i].max_violation);
    }
}

TEST_CASE("tolerance overrides reach the checks") {
    ScenarioOptions strict;
    strict.tol = 1e-7;
    CHECK(run_scenario("T5.2", strict).overall == "pass");
}
