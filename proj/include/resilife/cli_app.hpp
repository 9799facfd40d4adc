#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dependence.hpp"
#include "parse.hpp"
#include "scenarios.hpp"

namespace resilife::cli {

// Exit codes: 0 pass, 1 fail, 2 usage/spec/config error, 3 numerically
// inconclusive.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

namespace detail {

inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline void print_check(std::ostream& os, const CheckResult& c) {
    os << "  [" << (c.satisfied() ? "ok" : (c.inconclusive ? "??" : "XX")) << "] " << c.name;
    if (c.inconclusive) os << " (inconclusive)";
    else if (!c.satisfied())
        os << " (computed " << (c.holds ? "holds" : "fails") << ", expected "
           << (c.expected ? "holds" : "fails") << ")";
    if (c.witness_x) os << "  witness x=" << detail::fmt12(*c.witness_x);
    if (c.witness_xy)
        os << "  witness (" << detail::fmt12(c.witness_xy->first) << ", "
           << detail::fmt12(c.witness_xy->second) << ")";
    if (!c.satisfied() && c.max_violation > 0.0)
        os << "  max_violation=" << detail::fmt12(c.max_violation);
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
}

inline void print_report(std::ostream& os, const Report& r) {
    os << "scenario " << r.id << ": " << r.description << "\n";
    os << "seed " << r.seed << ", " << detail::fmt12(r.duration_ms) << " ms\n";
    if (!r.premises.empty()) {
        os << "premises:\n";
        for (const auto& c : r.premises) print_check(os, c);
    }
    if (!r.conclusions.empty()) {
        os << "conclusions:\n";
        for (const auto& c : r.conclusions) print_check(os, c);
    }
    if (!r.artifacts.empty()) os << "artifacts: " << r.artifacts.dump() << "\n";
    os << "overall: " << r.overall << "\n";
}

inline int exit_code(const Report& r) {
    if (r.overall == "pass") return kExitPass;
    if (r.overall == "inconclusive") return kExitInconclusive;
    return kExitFail;
}

inline bool emit(const Report& r, const std::string& format, const std::string& out_path,
                 std::ostream& os, std::ostream& err) {
    std::string text;
    if (format == "json") {
        text = to_json(r).dump(2) + "\n";
    } else if (format == "text") {
        std::ostringstream tmp;
        print_report(tmp, r);
        text = tmp.str();
    } else {
        err << "unknown format: " << format << "\n";
        return false;
    }
    if (out_path.empty()) {
        os << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot write " << out_path << "\n";
            return false;
        }
        f << text;
    }
    return true;
}

struct Objects {
    std::optional<LifetimeDistribution> baseline, baseline2;
    std::optional<MixingDistribution> mixing, mixing2;
    std::optional<ResidualMixture> mixture, mixture2;
};

inline DistributionView view_of(const Objects& obj, const std::string& name) {
    if (name == "baseline" && obj.baseline) return make_view(*obj.baseline);
    if (name == "baseline2" && obj.baseline2) return make_view(*obj.baseline2);
    if (name == "mixture" && obj.mixture) return make_view(*obj.mixture);
    if (name == "mixture2" && obj.mixture2) return make_view(*obj.mixture2);
    throw std::invalid_argument("unknown or unconfigured target '" + name + "'");
}

inline OrderKind order_kind(const std::string& s) {
    for (auto k : {OrderKind::LR, OrderKind::HR, OrderKind::RH, OrderKind::ST, OrderKind::MRL,
                   OrderKind::AI, OrderKind::UP_LR, OrderKind::UP_HR, OrderKind::UP_MRL})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown order kind: " + s);
}

inline AgingClass aging_class(const std::string& s) {
    for (auto c : {AgingClass::ILR, AgingClass::DLR, AgingClass::IFR, AgingClass::DFR,
                   AgingClass::DMRL, AgingClass::IMRL, AgingClass::NBU, AgingClass::NWU,
                   AgingClass::NBUE, AgingClass::NWUE})
        if (s == to_string(c)) return c;
    throw std::invalid_argument("unknown aging class: " + s);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Runs one configured check, e.g. "order:ST:mixture:baseline" or
// "aging:DFR:mixture" or "dependence:PLRD" or "sign_change:mixture:mixture2".
inline CheckResult run_config_check(const std::string& spec, const Objects& obj, const Grid& grid,
                                    double tol) {
    const auto parts = split(spec, ':');
    if (parts.empty()) throw std::invalid_argument("empty check spec");
    const auto& what = parts[0];
    if (what == "order" || what == "uporder") {
        if (parts.size() != 4)
            throw std::invalid_argument("expected " + what + ":<kind>:<left>:<right>");
        const auto kind = order_kind(parts[1]);
        const auto L = view_of(obj, parts[2]);
        const auto R = view_of(obj, parts[3]);
        const auto v = what == "order"
                           ? check_order(L, R, kind, grid, tol)
                           : check_upshifted_order(L, R, kind, grid, Grid::uniform(0.0, 5.0, 20), tol);
        return to_check(spec, v, true);
    }
    if (what == "aging") {
        if (parts.size() != 3) throw std::invalid_argument("expected aging:<class>:<target>");
        return to_check(spec, check_aging_class(view_of(obj, parts[2]), aging_class(parts[1]), grid, tol),
                        true);
    }
    if (what == "logconcavity") {
        if (parts.size() != 3)
            throw std::invalid_argument("expected logconcavity:<quantity>:<target>");
        const auto v = view_of(obj, parts[2]);
        const auto& fn = parts[1] == "hazard" ? v.hazard : (parts[1] == "pdf" ? v.pdf : v.sf);
        if (!fn) throw std::invalid_argument("quantity unavailable: " + parts[1]);
        const auto cv = check_log_concavity(fn, grid, tol);
        return numeric_check(spec, true, 0.0, tol, true, std::string("classified ") + to_string(cv.curvature));
    }
    if (what == "dependence") {
        if (parts.size() != 2) throw std::invalid_argument("expected dependence:<kind>");
        if (!obj.mixture) throw std::invalid_argument("dependence checks need baseline and mixing");
        JointAgeModel jm(*obj.mixture);
        const auto g = Grid::uniform(std::fmax(grid.lo, 1e-3), std::fmin(grid.hi, 6.0), 40);
        const auto& kind = parts[1];
        if (kind == "PLRD" || kind == "NLRD")
            return tp2_check(spec, check_plrd_nlrd(jm, g, g, tol),
                             kind == "PLRD" ? Tp2Class::TP2 : Tp2Class::RR2);
        if (kind == "RCSI" || kind == "RCSD")
            return tp2_check(spec, check_rcsi_rcsd(jm, g, g, tol),
                             kind == "RCSI" ? Tp2Class::TP2 : Tp2Class::RR2);
        if (kind == "SI" || kind == "SD")
            return si_check(spec, check_si_sd(jm, g, g, tol),
                            kind == "SI" ? MonotoneDependence::SI : MonotoneDependence::SD);
        throw std::invalid_argument("unknown dependence kind: " + kind);
    }
    if (what == "sign_change") {
        if (parts.size() != 3) throw std::invalid_argument("expected sign_change:<left>:<right>");
        const auto L = view_of(obj, parts[1]);
        const auto R = view_of(obj, parts[2]);
        const auto bracket =
            find_sign_change([&](double x) { return L.sf(x) - R.sf(x); }, grid);
        CheckResult c = numeric_check(spec, bracket.has_value(), 0.0, 0.0);
        if (bracket) c.witness_xy = std::make_pair(bracket->lo, bracket->hi);
        return c;
    }
    throw std::invalid_argument("unknown check kind: " + what);
}

inline Report run_config(const std::string& path, const ScenarioOptions& opts,
                         std::optional<Grid> grid_flag) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config parse error in " + path + ": " + e.what());
    }
    Objects obj;
    if (j.contains("baseline")) obj.baseline = parse_distribution(j["baseline"].get<std::string>());
    if (j.contains("baseline2")) obj.baseline2 = parse_distribution(j["baseline2"].get<std::string>());
    if (j.contains("mixing")) obj.mixing = parse_mixing(j["mixing"].get<std::string>());
    if (j.contains("mixing2")) obj.mixing2 = parse_mixing(j["mixing2"].get<std::string>());
    if (obj.baseline && obj.mixing) obj.mixture = ResidualMixture(*obj.baseline, *obj.mixing);
    if (obj.baseline2 && obj.mixing) // two baselines, one common age law
        obj.mixture2 = ResidualMixture(*obj.baseline2, *obj.mixing);
    else if (obj.baseline && obj.mixing2) // one baseline, two age laws
        obj.mixture2 = ResidualMixture(*obj.baseline, *obj.mixing2);
    Grid grid = default_check_grid();
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        const auto spacing = g.value("spacing", std::string("uniform"));
        grid = spacing == "geometric"
                   ? Grid::geometric(g.value("min", 1e-3), g.value("max", 20.0), g.value("points", 400))
                   : Grid::uniform(g.value("min", 1e-3), g.value("max", 20.0), g.value("points", 400));
    }
    if (grid_flag) grid = *grid_flag;
    const double tol = j.value("tol", kDefaultMonotoneTol);
    Report rep;
    rep.id = "config:" + path;
    rep.description = "user-configured check set";
    rep.seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : opts.master_seed;
    if (!j.contains("checks") || !j["checks"].is_array() || j["checks"].empty())
        throw std::invalid_argument("config needs a nonempty 'checks' array: " + path);
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& c : j["checks"])
        rep.conclusions.push_back(run_config_check(c.get<std::string>(), obj, grid, tol));
    rep.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.finalize();
    return rep;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"residual lifetime mixture toolkit"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list the scenario catalog");

    std::string target, format = "text", out_path;
    std::optional<std::uint64_t> seed_flag;
    std::optional<double> tol_flag;
    std::optional<double> gmin, gmax;
    std::optional<std::size_t> gpoints;
    auto* runcmd = app.add_subcommand("run", "run a catalog scenario or a JSON config");
    runcmd->add_option("target", target, "scenario id or config path")->required();
    runcmd->add_option("--format", format, "text or json");
    runcmd->add_option("--out", out_path, "write the report to this file");
    runcmd->add_option("--seed", seed_flag, "master seed (default: RESILIFE_SEED or built-in)");
    runcmd->add_option("--tol", tol_flag, "tolerance override for the scenario checks");
    runcmd->add_option("--grid-min", gmin, "grid lower end override");
    runcmd->add_option("--grid-max", gmax, "grid upper end override");
    runcmd->add_option("--grid-points", gpoints, "grid point-count override");

    std::string baseline_spec, mixing_spec, quantities = "sf";
    double ggmin = 1e-3, ggmax = 20.0;
    std::size_t ggpoints = 400;
    std::string grid_out;
    auto* gridcmd = app.add_subcommand("grid", "write a CSV of quantities for X and X*");
    gridcmd->add_option("--baseline", baseline_spec, "baseline distribution spec")->required();
    gridcmd->add_option("--mixing", mixing_spec, "mixing (random age) spec")->required();
    gridcmd->add_option("--quantities", quantities, "comma list of sf,cdf,pdf,hazard,mrl");
    gridcmd->add_option("--grid-min", ggmin, "grid lower end");
    gridcmd->add_option("--grid-max", ggmax, "grid upper end");
    gridcmd->add_option("--grid-points", ggpoints, "grid points");
    gridcmd->add_option("--out", grid_out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitPass;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (list->parsed()) {
            for (const auto& s : catalog()) out << s.id << "  " << s.description << "\n";
            return kExitPass;
        }
        if (runcmd->parsed()) {
            ScenarioOptions opts;
            if (seed_flag) {
                opts.master_seed = *seed_flag;
            } else if (const char* env = std::getenv("RESILIFE_SEED")) {
                opts.master_seed = std::strtoull(env, nullptr, 10);
            }
            opts.tol = tol_flag;
            std::optional<Grid> grid_override;
            if (gmin || gmax || gpoints)
                grid_override = Grid::uniform(gmin.value_or(1e-3), gmax.value_or(20.0),
                                              gpoints.value_or(400));
            opts.grid = grid_override;
            Report rep;
            const bool is_config = target.size() > 5 && target.substr(target.size() - 5) == ".json";
            if (is_config) {
                rep = detail::run_config(target, opts, grid_override);
            } else {
                rep = run_scenario(target, opts);
            }
            if (!detail::emit(rep, format, out_path, out, err)) return kExitUsage;
            return detail::exit_code(rep);
        }
        if (gridcmd->parsed()) {
            auto baseline = parse_distribution(baseline_spec);
            auto mixing = parse_mixing(mixing_spec);
            ResidualMixture mx(baseline, mixing);
            const auto grid = Grid::uniform(ggmin, ggmax, ggpoints);
            std::vector<std::string> qs = detail::split(quantities, ',');
            std::ostringstream csv;
            csv << "x";
            for (const auto& q : qs) csv << "," << q << "_x," << q << "_xstar";
            csv << "\n";
            for (double x : grid.abscissas()) {
                csv << detail::fmt12(x);
                for (const auto& q : qs) {
                    auto one = [&](auto&& f) {
                        try {
                            csv << "," << detail::fmt12(f());
                        } catch (const std::domain_error&) {
                            csv << ",nan";
                        }
                    };
                    if (q == "sf") { one([&] { return baseline.sf(x); }); one([&] { return mx.sf(x); }); }
                    else if (q == "cdf") { one([&] { return baseline.cdf(x); }); one([&] { return mx.cdf(x); }); }
                    else if (q == "pdf") { one([&] { return baseline.pdf(x); }); one([&] { return mx.pdf(x); }); }
                    else if (q == "hazard") { one([&] { return baseline.hazard(x); }); one([&] { return mx.hazard(x); }); }
                    else if (q == "mrl") { one([&] { return baseline.mrl(x); }); one([&] { return mx.mrl(x); }); }
                    else throw std::invalid_argument("unknown quantity: " + q);
                }
                csv << "\n";
            }
            if (grid_out.empty()) {
                out << csv.str();
            } else {
                std::ofstream f(grid_out);
                if (!f) {
                    err << "cannot write " << grid_out << "\n";
                    return kExitUsage;
                }
                f << csv.str();
            }
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const QuadratureError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitInconclusive;
    }
    return kExitUsage;
}

} // namespace resilife::cli
