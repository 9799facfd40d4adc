#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numerics.hpp"
#include "view.hpp"

namespace resilife {

enum class OrderKind { LR, HR, RH, ST, MRL, AI, UP_LR, UP_HR, UP_MRL };

inline const char* to_string(OrderKind k) {
    switch (k) {
        case OrderKind::LR: return "LR";
        case OrderKind::HR: return "HR";
        case OrderKind::RH: return "RH";
        case OrderKind::ST: return "ST";
        case OrderKind::MRL: return "MRL";
        case OrderKind::AI: return "AI";
        case OrderKind::UP_LR: return "UP_LR";
        case OrderKind::UP_HR: return "UP_HR";
        case OrderKind::UP_MRL: return "UP_MRL";
    }
    return "?";
}

// Outcome of a grid check of "X <= Y" in some order. "holds" means no
// violation above tol was found on this grid, never a proof. When more than
// 10% of grid points cannot be evaluated the verdict is inconclusive.
struct OrderVerdict {
    OrderKind kind;
    bool holds = false;
    bool inconclusive = false;
    std::optional<double> witness_x;
    std::optional<std::pair<double, double>> witness_tx; // (t, x) for up-shifted kinds
    double max_violation = 0.0;
    double tol = 0.0;
    std::size_t excluded_points = 0;
    std::string note;
};

namespace detail {

inline std::optional<double> view_eval(const std::function<double(double)>& f, double x) {
    try {
        const double v = f(x);
        if (!std::isfinite(v)) return std::nullopt;
        return v;
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

struct SeriesCheck {
    std::vector<double> xs;     // surviving abscissas
    std::vector<double> values; // ratio/comparison values at xs
    std::size_t excluded = 0;
};

// Evaluates fn over the grid, dropping points where it is undefined.
inline SeriesCheck gather(const std::function<std::optional<double>(double)>& fn, const Grid& grid) {
    SeriesCheck s;
    for (double x : grid.abscissas()) {
        auto v = fn(x);
        if (v) {
            s.xs.push_back(x);
            s.values.push_back(*v);
        } else {
            ++s.excluded;
        }
    }
    return s;
}

inline OrderVerdict from_monotone(OrderKind kind, const SeriesCheck& s, Direction dir, double tol,
                                  std::size_t grid_points) {
    OrderVerdict v;
    v.kind = kind;
    v.tol = tol;
    v.excluded_points = s.excluded;
    if (s.excluded * 10 > grid_points || s.values.size() < 2) {
        v.inconclusive = true;
        v.note = "too many grid points excluded";
        return v;
    }
    const auto m = is_monotone(s.values, dir, tol);
    v.holds = m.holds;
    v.max_violation = m.max_violation;
    if (m.first_violation) v.witness_x = s.xs[*m.first_violation];
    return v;
}

inline OrderVerdict from_pointwise(OrderKind kind, const SeriesCheck& s, double tol,
                                   std::size_t grid_points) {
    // s.values holds signed violations; "X <= Y" requires all of them <= tol.
    OrderVerdict v;
    v.kind = kind;
    v.tol = tol;
    v.excluded_points = s.excluded;
    if (s.excluded * 10 > grid_points || s.values.empty()) {
        v.inconclusive = true;
        v.note = "too many grid points excluded";
        return v;
    }
    std::size_t worst = 0;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        if (s.values[i] > s.values[worst]) worst = i;
    v.max_violation = std::fmax(s.values[worst], 0.0);
    v.holds = !(s.values[worst] > tol);
    if (!v.holds) v.witness_x = s.xs[worst];
    return v;
}

inline const std::function<double(double)>& required(const std::function<double(double)>& f,
                                                     const char* what) {
    if (!f) throw std::invalid_argument(std::string("order check needs ") + what);
    return f;
}

} // namespace detail

// Grid verification of "X <= Y" in the given order.
//   LR : pdf_Y / pdf_X increasing
//   HR : hazard_X >= hazard_Y pointwise
//   RH : rhazard_X <= rhazard_Y pointwise
//   ST : sf_X <= sf_Y pointwise
//   MRL: mrl_X <= mrl_Y pointwise
//   AI : cumhaz_X / cumhaz_Y increasing, cumhaz = -ln sf
inline OrderVerdict check_order(const DistributionView& X, const DistributionView& Y, OrderKind kind,
                                const Grid& grid = default_check_grid(),
                                double tol = kDefaultMonotoneTol) {
    using detail::gather;
    using detail::required;
    using detail::view_eval;
    const std::size_t n = grid.points;
    switch (kind) {
        case OrderKind::LR: {
            const auto& fX = required(X.pdf, "pdf of X");
            const auto& fY = required(Y.pdf, "pdf of Y");
            auto s = gather(
                [&](double x) -> std::optional<double> {
                    auto a = view_eval(fX, x), b = view_eval(fY, x);
                    if (!a || !b || !(*a > 0.0)) return std::nullopt;
                    return *b / *a;
                },
                grid);
            return detail::from_monotone(kind, s, Direction::Increasing, tol, n);
        }
        case OrderKind::AI: {
            const auto& sX = required(X.sf, "sf of X");
            const auto& sY = required(Y.sf, "sf of Y");
            auto s = gather(
                [&](double x) -> std::optional<double> {
                    auto a = view_eval(sX, x), b = view_eval(sY, x);
                    if (!a || !b) return std::nullopt;
                    const double lx = -std::log(*a), ly = -std::log(*b);
                    if (!std::isfinite(lx) || !std::isfinite(ly) || !(ly > 0.0)) return std::nullopt;
                    return lx / ly;
                },
                grid);
            return detail::from_monotone(kind, s, Direction::Increasing, tol, n);
        }
        case OrderKind::HR: {
            const auto& rX = required(X.hazard, "hazard of X");
            const auto& rY = required(Y.hazard, "hazard of Y");
            auto s = gather(
                [&](double x) -> std::optional<double> {
                    auto a = view_eval(rX, x), b = view_eval(rY, x);
                    if (!a || !b) return std::nullopt;
                    return *b - *a;
                },
                grid);
            return detail::from_pointwise(kind, s, tol, n);
        }
        case OrderKind::RH: {
            const auto& rX = required(X.rhazard, "reversed hazard of X");
            const auto& rY = required(Y.rhazard, "reversed hazard of Y");
            auto s = gather(
                [&](double x) -> std::optional<double> {
                    auto a = view_eval(rX, x), b = view_eval(rY, x);
                    if (!a || !b) return std::nullopt;
                    return *a - *b;
                },
                grid);
            return detail::from_pointwise(kind, s, tol, n);
        }
        case OrderKind::ST: {
            const auto& sX = required(X.sf, "sf of X");
            const auto& sY = required(Y.sf, "sf of Y");
            auto s = gather(
                [&](double x) -> std::optional<double> {
                    auto a = view_eval(sX, x), b = view_eval(sY, x);
                    if (!a || !b) return std::nullopt;
                    return *a - *b;
                },
                grid);
            return detail::from_pointwise(kind, s, tol, n);
        }
        case OrderKind::MRL: {
            const auto& mX = required(X.mrl, "mrl of X");
            const auto& mY = required(Y.mrl, "mrl of Y");
            auto s = gather(
                [&](double x) -> std::optional<double> {
                    auto a = view_eval(mX, x), b = view_eval(mY, x);
                    if (!a || !b) return std::nullopt;
                    return *a - *b;
                },
                grid);
            return detail::from_pointwise(kind, s, tol, n);
        }
        default:
            throw std::invalid_argument("check_order: up-shifted kinds need check_upshifted_order");
    }
}

// Grid verification of "X <= Y" in an up-shifted order over a (t, x) grid:
// q_X(t + x) / q_Y(t) must be decreasing in t for every x, with q the pdf for
// UP_LR, the sf for UP_HR, and the integrated sf for UP_MRL.
inline OrderVerdict check_upshifted_order(const DistributionView& X, const DistributionView& Y,
                                          OrderKind kind, const Grid& tgrid, const Grid& xgrid,
                                          double tol = kDefaultMonotoneTol) {
    const std::function<double(double)>* qx = nullptr;
    const std::function<double(double)>* qy = nullptr;
    switch (kind) {
        case OrderKind::UP_LR:
            qx = &detail::required(X.pdf, "pdf of X");
            qy = &detail::required(Y.pdf, "pdf of Y");
            break;
        case OrderKind::UP_HR:
            qx = &detail::required(X.sf, "sf of X");
            qy = &detail::required(Y.sf, "sf of Y");
            break;
        case OrderKind::UP_MRL:
            qx = &detail::required(X.isf, "integrated sf of X");
            qy = &detail::required(Y.isf, "integrated sf of Y");
            break;
        default:
            throw std::invalid_argument("check_upshifted_order: plain kinds need check_order");
    }
    OrderVerdict v;
    v.kind = kind;
    v.tol = tol;
    v.holds = true;
    const auto ts = tgrid.abscissas();
    const auto xs = xgrid.abscissas();
    const std::size_t total = ts.size() * xs.size();
    for (double shift : xs) {
        detail::SeriesCheck s;
        for (double t : ts) {
            auto num = detail::view_eval(*qx, t + shift);
            auto den = detail::view_eval(*qy, t);
            if (num && den && *den > 0.0) {
                s.xs.push_back(t);
                s.values.push_back(*num / *den);
            } else {
                ++s.excluded;
            }
        }
        v.excluded_points += s.excluded;
        if (s.values.size() < 2) continue;
        const auto m = is_monotone(s.values, Direction::Decreasing, tol);
        if (!m.holds && v.holds) {
            v.holds = false;
            v.witness_tx = std::make_pair(s.xs[*m.first_violation], shift);
        }
        v.max_violation = std::fmax(v.max_violation, m.max_violation);
    }
    if (v.excluded_points * 10 > total) {
        v.inconclusive = true;
        v.note = "too many grid points excluded";
    }
    return v;
}

} // namespace resilife
