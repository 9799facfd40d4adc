#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "aging.hpp"
#include "mixture.hpp"
#include "numerics.hpp"

namespace resilife {

// Joint law of (X*, Theta) for a residual mixture. The joint density needs a
// continuous mixing; the joint survival also covers discrete ages.
class JointAgeModel {
public:
    explicit JointAgeModel(ResidualMixture mx) : mx_(std::move(mx)) {}

    // h(x, theta) = f(x + theta) h(theta) / sf(theta)
    double joint_pdf(double x, double theta) const {
        if (!mx_.mixing().has_density())
            throw std::domain_error("joint density needs a continuous mixing");
        const auto& base = mx_.baseline();
        const double h = mx_.mixing().pdf(theta);
        if (h == 0.0) return 0.0;
        return std::exp(base.log_pdf(x + theta) - base.log_sf(theta)) * h;
    }

    // P(X* > x, Theta >= theta) = int over [theta, inf) of sf(x+w)/sf(w) dH(w)
    double joint_sf(double x, double theta) const {
        const auto& base = mx_.baseline();
        const double v = mx_.mixing().expect_tail(
            [&base, x](double w) { return std::exp(base.log_sf(x + w) - base.log_sf(w)); }, theta,
            mx_.quad_tol());
        return std::fmin(std::fmax(v, 0.0), 1.0);
    }

    const ResidualMixture& mixture() const { return mx_; }

private:
    ResidualMixture mx_;
};

// Positive/negative likelihood ratio dependence of (X*, Theta): TP2/RR2
// classification of the joint density over the grid product.
inline Tp2Verdict check_plrd_nlrd(const JointAgeModel& jm, const Grid& xgrid, const Grid& tgrid,
                                  double tol = 1e-6) {
    return check_tp2_rr2([&jm](double x, double t) { return jm.joint_pdf(x, t); }, xgrid, tgrid, tol);
}

// Right corner set increasing/decreasing: TP2/RR2 of the joint survival.
inline Tp2Verdict check_rcsi_rcsd(const JointAgeModel& jm, const Grid& xgrid, const Grid& tgrid,
                                  double tol = 1e-6) {
    return check_tp2_rr2([&jm](double x, double t) { return jm.joint_sf(x, t); }, xgrid, tgrid, tol);
}

enum class MonotoneDependence { SI, SD, Neither, Both };

inline const char* to_string(MonotoneDependence m) {
    switch (m) {
        case MonotoneDependence::SI: return "SI";
        case MonotoneDependence::SD: return "SD";
        case MonotoneDependence::Neither: return "neither";
        case MonotoneDependence::Both: return "both";
    }
    return "?";
}

struct SiVerdict {
    MonotoneDependence cls = MonotoneDependence::Both;
    double max_si_violation = 0.0; // worst decrease when testing "increasing in theta"
    double max_sd_violation = 0.0;
    std::optional<std::pair<double, double>> si_witness; // (theta, x)
    std::optional<std::pair<double, double>> sd_witness;
    double tol = 0.0;
};

// Stochastically increasing/decreasing conditional law: monotonicity in theta
// of P(X* > x | Theta = theta) = sf(x + theta) / sf(theta), for each x.
inline SiVerdict check_si_sd(const JointAgeModel& jm, const Grid& xgrid, const Grid& tgrid,
                             double tol = kDefaultMonotoneTol) {
    const auto& base = jm.mixture().baseline();
    SiVerdict v;
    v.tol = tol;
    const auto ts = tgrid.abscissas();
    for (double x : xgrid.abscissas()) {
        std::vector<double> vals;
        vals.reserve(ts.size());
        for (double t : ts)
            vals.push_back(std::exp(base.log_sf(x + t) - base.log_sf(t)));
        const auto inc = is_monotone(vals, Direction::Increasing, tol);
        const auto dec = is_monotone(vals, Direction::Decreasing, tol);
        if (inc.max_violation > v.max_si_violation) {
            v.max_si_violation = inc.max_violation;
            if (inc.first_violation) v.si_witness = std::make_pair(ts[*inc.first_violation], x);
        }
        if (dec.max_violation > v.max_sd_violation) {
            v.max_sd_violation = dec.max_violation;
            if (dec.first_violation) v.sd_witness = std::make_pair(ts[*dec.first_violation], x);
        }
    }
    const bool si = !(v.max_si_violation > tol);
    const bool sd = !(v.max_sd_violation > tol);
    v.cls = si ? (sd ? MonotoneDependence::Both : MonotoneDependence::SI)
               : (sd ? MonotoneDependence::SD : MonotoneDependence::Neither);
    return v;
}

} // namespace resilife
