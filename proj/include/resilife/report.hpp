#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aging.hpp"
#include "dependence.hpp"
#include "orders.hpp"

namespace resilife {

// One premise or conclusion check inside a scenario. `expected` records what
// the catalog demands (breakdown scenarios expect holds == false); the check
// is satisfied when the computed outcome matches the expectation.
struct CheckResult {
    std::string name;
    std::string kind; // order | aging | curvature | tp2 | dependence | numeric | mc
    bool expected = true;
    bool holds = false;
    bool inconclusive = false;
    double max_violation = 0.0;
    double tol = 0.0;
    std::optional<double> witness_x;
    std::optional<std::pair<double, double>> witness_xy;
    std::string note;

    bool satisfied() const { return !inconclusive && holds == expected; }
};

struct Report {
    std::string id;
    std::string description;
    std::uint64_t seed = 0;
    std::vector<CheckResult> premises;
    std::vector<CheckResult> conclusions;
    std::string overall; // pass | fail | inconclusive
    double duration_ms = 0.0;
    nlohmann::json artifacts = nlohmann::json::object();

    void finalize() {
        bool inconclusive = false, ok = true;
        for (const auto* list : {&premises, &conclusions})
            for (const auto& c : *list) {
                inconclusive = inconclusive || c.inconclusive;
                ok = ok && c.satisfied();
            }
        overall = inconclusive ? "inconclusive" : (ok ? "pass" : "fail");
    }
    bool passed() const { return overall == "pass"; }
};

namespace detail {

inline nlohmann::json check_to_json(const CheckResult& c) {
    nlohmann::json j{{"name", c.name},
                     {"kind", c.kind},
                     {"expected", c.expected},
                     {"holds", c.holds},
                     {"inconclusive", c.inconclusive},
                     {"satisfied", c.satisfied()},
                     {"max_violation", c.max_violation},
                     {"tol", c.tol}};
    if (c.witness_x) j["witness_x"] = *c.witness_x;
    if (c.witness_xy) j["witness_xy"] = {c.witness_xy->first, c.witness_xy->second};
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline CheckResult check_from_json(const nlohmann::json& j) {
    CheckResult c;
    c.name = j.at("name").get<std::string>();
    c.kind = j.at("kind").get<std::string>();
    c.expected = j.at("expected").get<bool>();
    c.holds = j.at("holds").get<bool>();
    c.inconclusive = j.at("inconclusive").get<bool>();
    c.max_violation = j.at("max_violation").get<double>();
    c.tol = j.at("tol").get<double>();
    if (j.contains("witness_x")) c.witness_x = j["witness_x"].get<double>();
    if (j.contains("witness_xy"))
        c.witness_xy = std::make_pair(j["witness_xy"][0].get<double>(), j["witness_xy"][1].get<double>());
    if (j.contains("note")) c.note = j["note"].get<std::string>();
    return c;
}

} // namespace detail

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json premises = nlohmann::json::array();
    for (const auto& c : r.premises) premises.push_back(detail::check_to_json(c));
    nlohmann::json conclusions = nlohmann::json::array();
    for (const auto& c : r.conclusions) conclusions.push_back(detail::check_to_json(c));
    return nlohmann::json{{"id", r.id},
                          {"description", r.description},
                          {"seed", r.seed},
                          {"premises", premises},
                          {"conclusions", conclusions},
                          {"overall", r.overall},
                          {"duration_ms", r.duration_ms},
                          {"artifacts", r.artifacts}};
}

inline Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.id = j.at("id").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("premises")) r.premises.push_back(detail::check_from_json(c));
    for (const auto& c : j.at("conclusions")) r.conclusions.push_back(detail::check_from_json(c));
    r.overall = j.at("overall").get<std::string>();
    r.duration_ms = j.at("duration_ms").get<double>();
    r.artifacts = j.at("artifacts");
    return r;
}

// Conversions from the check verdict types.

inline CheckResult to_check(std::string name, const OrderVerdict& v, bool expected) {
    CheckResult c;
    c.name = std::move(name);
    c.kind = "order";
    c.expected = expected;
    c.holds = v.holds;
    c.inconclusive = v.inconclusive;
    c.max_violation = v.max_violation;
    c.tol = v.tol;
    c.witness_x = v.witness_x;
    c.witness_xy = v.witness_tx;
    c.note = v.note;
    return c;
}

inline CheckResult to_check(std::string name, const ClassVerdict& v, bool expected) {
    CheckResult c;
    c.name = std::move(name);
    c.kind = "aging";
    c.expected = expected;
    c.holds = v.holds;
    c.inconclusive = v.inconclusive;
    c.max_violation = v.max_violation;
    c.tol = v.tol;
    c.witness_x = v.witness_x;
    c.witness_xy = v.witness_xy;
    c.note = v.note;
    return c;
}

// A TP2/RR2 or SI/SD outcome where the expectation is a specific class label.
inline CheckResult tp2_check(std::string name, const Tp2Verdict& v, Tp2Class want) {
    CheckResult c;
    c.name = std::move(name);
    c.kind = "tp2";
    c.expected = true;
    c.holds = v.cls == want || (v.cls == Tp2Class::Both &&
                                (want == Tp2Class::TP2 || want == Tp2Class::RR2));
    c.max_violation = want == Tp2Class::TP2 ? -v.min_minor : v.max_minor;
    c.tol = v.tol;
    c.witness_xy = want == Tp2Class::TP2 ? v.neg_witness : v.pos_witness;
    c.note = std::string("classified ") + to_string(v.cls);
    return c;
}

inline CheckResult si_check(std::string name, const SiVerdict& v, MonotoneDependence want) {
    CheckResult c;
    c.name = std::move(name);
    c.kind = "dependence";
    c.expected = true;
    c.holds = v.cls == want || (v.cls == MonotoneDependence::Both &&
                                (want == MonotoneDependence::SI || want == MonotoneDependence::SD));
    c.max_violation = want == MonotoneDependence::SI ? v.max_si_violation : v.max_sd_violation;
    c.tol = v.tol;
    c.witness_xy = want == MonotoneDependence::SI ? v.si_witness : v.sd_witness;
    c.note = std::string("classified ") + to_string(v.cls);
    return c;
}

inline CheckResult numeric_check(std::string name, bool holds, double max_violation, double tol,
                                 bool expected = true, std::string note = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.kind = "numeric";
    c.expected = expected;
    c.holds = holds;
    c.max_violation = max_violation;
    c.tol = tol;
    c.note = std::move(note);
    return c;
}

} // namespace resilife
