#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numerics.hpp"
#include "orders.hpp"
#include "view.hpp"

namespace resilife {

enum class AgingClass { ILR, DLR, IFR, DFR, DMRL, IMRL, NBU, NWU, NBUE, NWUE };

inline const char* to_string(AgingClass c) {
    switch (c) {
        case AgingClass::ILR: return "ILR";
        case AgingClass::DLR: return "DLR";
        case AgingClass::IFR: return "IFR";
        case AgingClass::DFR: return "DFR";
        case AgingClass::DMRL: return "DMRL";
        case AgingClass::IMRL: return "IMRL";
        case AgingClass::NBU: return "NBU";
        case AgingClass::NWU: return "NWU";
        case AgingClass::NBUE: return "NBUE";
        case AgingClass::NWUE: return "NWUE";
    }
    return "?";
}

struct ClassVerdict {
    AgingClass cls;
    bool holds = false;
    bool inconclusive = false;
    std::optional<double> witness_x;
    std::optional<std::pair<double, double>> witness_xy; // for the used-vs-new pairs
    double max_violation = 0.0;
    double tol = 0.0;
    std::size_t excluded_points = 0;
    std::string note;
};

enum class Curvature { LogConcave, LogConvex, Neither, Both };

inline const char* to_string(Curvature c) {
    switch (c) {
        case Curvature::LogConcave: return "log-concave";
        case Curvature::LogConvex: return "log-convex";
        case Curvature::Neither: return "neither";
        case Curvature::Both: return "both";
    }
    return "?";
}

struct CurvatureVerdict {
    Curvature curvature = Curvature::Both;
    // worst second difference on each side (positive numbers = violations)
    double max_concavity_violation = 0.0;
    double max_convexity_violation = 0.0;
    std::optional<double> concavity_witness;
    std::optional<double> convexity_witness;
    double tol = 0.0;
};

enum class Tp2Class { TP2, RR2, Neither, Both };

inline const char* to_string(Tp2Class c) {
    switch (c) {
        case Tp2Class::TP2: return "TP2";
        case Tp2Class::RR2: return "RR2";
        case Tp2Class::Neither: return "neither";
        case Tp2Class::Both: return "both";
    }
    return "?";
}

struct Tp2Verdict {
    Tp2Class cls = Tp2Class::Both;
    double min_minor = 0.0;
    double max_minor = 0.0;
    std::optional<std::pair<double, double>> neg_witness; // lower-left corner of the 2x2 block
    std::optional<std::pair<double, double>> pos_witness;
    double tol = 0.0;
};

namespace detail {

// Second differences of ln(fn) on the grid, scaled to the local squared step
// so uniform and geometric grids behave alike. Returns (x_i, d2_i) pairs.
struct LogCurvature {
    std::vector<double> xs;
    std::vector<double> d2;
    std::size_t excluded = 0;
};

inline LogCurvature log_second_differences(const std::function<double(double)>& fn,
                                           const Grid& grid) {
    LogCurvature out;
    const auto x = grid.abscissas();
    std::vector<double> lf(x.size());
    std::vector<bool> good(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto v = detail::view_eval(fn, x[i]);
        good[i] = v.has_value() && *v > 0.0;
        if (good[i]) lf[i] = std::log(*v);
        else ++out.excluded;
    }
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        if (!good[i - 1] || !good[i] || !good[i + 1]) continue;
        const double h1 = x[i] - x[i - 1];
        const double h2 = x[i + 1] - x[i];
        const double curv =
            2.0 * ((lf[i + 1] - lf[i]) / h2 - (lf[i] - lf[i - 1]) / h1) / (h1 + h2);
        const double hbar = 0.5 * (h1 + h2);
        out.xs.push_back(x[i]);
        out.d2.push_back(curv * hbar * hbar);
    }
    return out;
}

inline ClassVerdict monotone_class_verdict(AgingClass cls, const DistributionView& d,
                                           const std::function<double(double)>& fn, Direction dir,
                                           const Grid& grid, double tol) {
    (void)d;
    ClassVerdict v;
    v.cls = cls;
    v.tol = tol;
    auto s = detail::gather([&](double x) { return detail::view_eval(fn, x); }, grid);
    v.excluded_points = s.excluded;
    if (s.excluded * 10 > grid.points || s.values.size() < 2) {
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

} // namespace detail

// Classifies fn (positive on the grid) by the sign pattern of the second
// differences of ln fn.
inline CurvatureVerdict check_log_concavity(const std::function<double(double)>& fn,
                                            const Grid& grid = default_check_grid(),
                                            double tol = kDefaultMonotoneTol) {
    auto lc = detail::log_second_differences(fn, grid);
    if (lc.d2.size() < 1) throw std::invalid_argument("check_log_concavity: fn not positive on grid");
    CurvatureVerdict v;
    v.tol = tol;
    for (std::size_t i = 0; i < lc.d2.size(); ++i) {
        if (lc.d2[i] > v.max_concavity_violation) {
            v.max_concavity_violation = lc.d2[i];
            if (lc.d2[i] > tol) v.concavity_witness = lc.xs[i];
        }
        if (-lc.d2[i] > v.max_convexity_violation) {
            v.max_convexity_violation = -lc.d2[i];
            if (-lc.d2[i] > tol) v.convexity_witness = lc.xs[i];
        }
    }
    const bool concave = !(v.max_concavity_violation > tol);
    const bool convex = !(v.max_convexity_violation > tol);
    v.curvature = concave ? (convex ? Curvature::Both : Curvature::LogConcave)
                          : (convex ? Curvature::LogConvex : Curvature::Neither);
    return v;
}

// Membership check for the ten aging classes of a single distribution-like
// object. The two used-vs-new classes (NBU/NWU) compare sf(x+y) against
// sf(x)sf(y) over the grid square; everything else reduces to a monotonicity
// or a threshold sweep.
inline ClassVerdict check_aging_class(const DistributionView& d, AgingClass cls,
                                      const Grid& grid = default_check_grid(),
                                      double tol = kDefaultMonotoneTol) {
    switch (cls) {
        case AgingClass::ILR:
        case AgingClass::DLR: {
            if (!d.pdf) throw std::invalid_argument("ILR/DLR needs a pdf");
            auto lc = detail::log_second_differences(d.pdf, grid);
            ClassVerdict v;
            v.cls = cls;
            v.tol = tol;
            v.excluded_points = lc.excluded;
            if (lc.excluded * 10 > grid.points || lc.d2.empty()) {
                v.inconclusive = true;
                v.note = "too many grid points excluded";
                return v;
            }
            // ILR: ln pdf concave (d2 <= tol); DLR: convex (d2 >= -tol)
            const double sign = cls == AgingClass::ILR ? 1.0 : -1.0;
            std::size_t worst = 0;
            for (std::size_t i = 0; i < lc.d2.size(); ++i)
                if (sign * lc.d2[i] > sign * lc.d2[worst]) worst = i;
            v.max_violation = std::fmax(sign * lc.d2[worst], 0.0);
            v.holds = !(v.max_violation > tol);
            if (!v.holds) v.witness_x = lc.xs[worst];
            return v;
        }
        case AgingClass::IFR:
        case AgingClass::DFR: {
            if (!d.hazard) throw std::invalid_argument("IFR/DFR needs a hazard");
            const auto dir = cls == AgingClass::IFR ? Direction::Increasing : Direction::Decreasing;
            return detail::monotone_class_verdict(cls, d, d.hazard, dir, grid, tol);
        }
        case AgingClass::DMRL:
        case AgingClass::IMRL: {
            if (!d.mrl) throw std::invalid_argument("DMRL/IMRL needs an mrl");
            const auto dir = cls == AgingClass::DMRL ? Direction::Decreasing : Direction::Increasing;
            return detail::monotone_class_verdict(cls, d, d.mrl, dir, grid, tol);
        }
        case AgingClass::NBU:
        case AgingClass::NWU: {
            if (!d.sf) throw std::invalid_argument("NBU/NWU needs an sf");
            ClassVerdict v;
            v.cls = cls;
            v.tol = tol;
            const auto xs = grid.abscissas();
            const double sign = cls == AgingClass::NBU ? 1.0 : -1.0;
            std::size_t total = 0;
            for (double x : xs) {
                auto sx = detail::view_eval(d.sf, x);
                for (double y : xs) {
                    if (y > x) break; // sf(x+y) is symmetric in (x, y)
                    ++total;
                    auto sy = detail::view_eval(d.sf, y);
                    auto sxy = detail::view_eval(d.sf, x + y);
                    if (!sx || !sy || !sxy) { ++v.excluded_points; continue; }
                    // NBU: sf(x+y) <= sf(x) sf(y); NWU: the reverse
                    const double violation = sign * (*sxy - *sx * *sy);
                    if (violation > v.max_violation) {
                        v.max_violation = violation;
                        if (violation > tol) v.witness_xy = std::make_pair(x, y);
                    }
                }
            }
            if (v.excluded_points * 10 > total) {
                v.inconclusive = true;
                v.note = "too many grid points excluded";
                return v;
            }
            v.holds = !(v.max_violation > tol);
            return v;
        }
        case AgingClass::NBUE:
        case AgingClass::NWUE: {
            if (!d.mrl || !d.mean) throw std::invalid_argument("NBUE/NWUE needs mrl and a finite mean");
            const double mean = d.mean();
            const double sign = cls == AgingClass::NBUE ? 1.0 : -1.0;
            ClassVerdict v;
            v.cls = cls;
            v.tol = tol;
            auto s = detail::gather([&](double x) { return detail::view_eval(d.mrl, x); }, grid);
            v.excluded_points = s.excluded;
            if (s.excluded * 10 > grid.points || s.values.empty()) {
                v.inconclusive = true;
                v.note = "too many grid points excluded";
                return v;
            }
            for (std::size_t i = 0; i < s.values.size(); ++i) {
                // NBUE: mrl(x) <= mean; NWUE: mrl(x) >= mean
                const double violation = sign * (s.values[i] - mean);
                if (violation > v.max_violation) {
                    v.max_violation = violation;
                    if (violation > tol) v.witness_x = s.xs[i];
                }
            }
            v.holds = !(v.max_violation > tol);
            return v;
        }
    }
    throw std::logic_error("check_aging_class: unknown class");
}

// TP2 / RR2 classification of a nonnegative bivariate kernel through its
// adjacent 2x2 minors; adjacent minors suffice for positive kernels on a grid.
inline Tp2Verdict check_tp2_rr2(const std::function<double(double, double)>& beta,
                                const Grid& xgrid, const Grid& ygrid,
                                double tol = kDefaultMonotoneTol) {
    const auto xs = xgrid.abscissas();
    const auto ys = ygrid.abscissas();
    std::vector<std::vector<double>> b(xs.size(), std::vector<double>(ys.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            b[i][j] = beta(xs[i], ys[j]);
            if (std::isnan(b[i][j]) || b[i][j] < 0.0)
                throw std::domain_error("check_tp2_rr2: kernel must be nonnegative");
        }
    Tp2Verdict v;
    v.tol = tol;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            const double minor = b[i][j] * b[i + 1][j + 1] - b[i][j + 1] * b[i + 1][j];
            if (minor < v.min_minor) {
                v.min_minor = minor;
                if (minor < -tol) v.neg_witness = std::make_pair(xs[i], ys[j]);
            }
            if (minor > v.max_minor) {
                v.max_minor = minor;
                if (minor > tol) v.pos_witness = std::make_pair(xs[i], ys[j]);
            }
        }
    const bool tp2 = !(v.min_minor < -tol);
    const bool rr2 = !(v.max_minor > tol);
    v.cls = tp2 ? (rr2 ? Tp2Class::Both : Tp2Class::TP2)
                : (rr2 ? Tp2Class::RR2 : Tp2Class::Neither);
    return v;
}

} // namespace resilife
