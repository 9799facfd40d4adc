#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "distributions.hpp"
#include "mixing.hpp"

namespace resilife {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Splits "name(args)" into name and raw args; name-only specs get empty args.
inline std::pair<std::string, std::string> split_call(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return {trim(spec), ""};
    if (spec.back() != ')')
        throw std::invalid_argument("bad spec, missing ')': " + spec);
    return {trim(spec.substr(0, open)), spec.substr(open + 1, spec.size() - open - 2)};
}

// Top-level comma split honoring nested parentheses.
inline std::vector<std::string> split_args(const std::string& args) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : args) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

inline double parse_real(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + s + "' in " + ctx);
    }
}

inline std::pair<double, double> parse_colon_pair(const std::string& s, const std::string& ctx) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("expected 'a:b' in " + ctx + ", got '" + s + "'");
    return {parse_real(trim(s.substr(0, colon)), ctx), parse_real(trim(s.substr(colon + 1)), ctx)};
}

} // namespace detail

// Tabulated survival files: CSV with header `x,sf`, strictly increasing x,
// nonincreasing sf, first row `0,1`.
inline LifetimeDistribution load_tabulated(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tabulated file: " + path);
    std::string line;
    if (!std::getline(in, line) || detail::trim(line) != "x,sf")
        throw std::invalid_argument("tabulated file must start with header 'x,sf': " + path);
    std::vector<std::pair<double, double>> knots;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = detail::trim(line);
        if (t.empty()) continue;
        const auto comma = t.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected 'x,sf' row");
        knots.emplace_back(detail::parse_real(detail::trim(t.substr(0, comma)), path),
                           detail::parse_real(detail::trim(t.substr(comma + 1)), path));
    }
    if (knots.empty() || knots.front() != std::pair<double, double>(0.0, 1.0))
        throw std::invalid_argument("tabulated file must begin with row '0,1': " + path);
    return tabulated(std::move(knots));
}

// Baseline spec grammar: exp(rate) | weibull(shape,scale) |
// hyperexp(p1:l1,p2:l2,...) | loglogistic(shape,scale) | tabulated(path)
inline LifetimeDistribution parse_distribution(const std::string& spec) {
    const auto [name, raw] = detail::split_call(detail::trim(spec));
    const auto args = detail::split_args(raw);
    if (name == "exp") {
        if (args.size() != 1) throw std::invalid_argument("exp(rate) takes one argument");
        return exponential(detail::parse_real(args[0], spec));
    }
    if (name == "weibull") {
        if (args.size() != 2) throw std::invalid_argument("weibull(shape,scale) takes two arguments");
        return weibull(detail::parse_real(args[0], spec), detail::parse_real(args[1], spec));
    }
    if (name == "hyperexp") {
        if (args.empty()) throw std::invalid_argument("hyperexp needs at least one p:rate pair");
        std::vector<double> p, l;
        for (const auto& a : args) {
            const auto [w, r] = detail::parse_colon_pair(a, spec);
            p.push_back(w);
            l.push_back(r);
        }
        return hyper_exponential(std::move(p), std::move(l));
    }
    if (name == "loglogistic") {
        if (args.size() != 2)
            throw std::invalid_argument("loglogistic(shape,scale) takes two arguments");
        return log_logistic(detail::parse_real(args[0], spec), detail::parse_real(args[1], spec));
    }
    if (name == "tabulated") {
        if (args.size() != 1) throw std::invalid_argument("tabulated(path) takes one argument");
        return load_tabulated(args[0]);
    }
    throw std::invalid_argument("unknown distribution spec: " + spec);
}

// Mixing spec grammar: degenerate(theta) | atoms(t1:p1,...) | cont(<dist>) |
// os(<dist>,k,n) | ce61_h1 | ce61_h2
inline MixingDistribution parse_mixing(const std::string& spec) {
    const auto [name, raw] = detail::split_call(detail::trim(spec));
    if (name == "ce61_h1") return MixingDistribution::continuous(cauchy_squared(1.0));
    if (name == "ce61_h2") return MixingDistribution::continuous(half_cauchy(1.0));
    const auto args = detail::split_args(raw);
    if (name == "degenerate") {
        if (args.size() != 1) throw std::invalid_argument("degenerate(theta) takes one argument");
        return MixingDistribution::degenerate(detail::parse_real(args[0], spec));
    }
    if (name == "atoms") {
        std::vector<std::pair<double, double>> atoms;
        for (const auto& a : args) atoms.push_back(detail::parse_colon_pair(a, spec));
        return MixingDistribution::atoms(std::move(atoms));
    }
    if (name == "cont") {
        if (args.size() != 1) throw std::invalid_argument("cont(<dist-spec>) takes one argument");
        return MixingDistribution::continuous(parse_distribution(args[0]));
    }
    if (name == "os") {
        if (args.size() != 3) throw std::invalid_argument("os(<dist-spec>,k,n) takes three arguments");
        const int k = static_cast<int>(detail::parse_real(args[1], spec));
        const int n = static_cast<int>(detail::parse_real(args[2], spec));
        return MixingDistribution::order_statistic(parse_distribution(args[0]), k, n);
    }
    throw std::invalid_argument("unknown mixing spec: " + spec);
}

} // namespace resilife
