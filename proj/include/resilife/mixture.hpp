#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "distributions.hpp"
#include "mixing.hpp"
#include "numerics.hpp"

namespace resilife {

// The average residual life variable X*: residual lifetimes of the baseline,
// mixed over a random age. sf(x) = E[ sf_base(x + Theta) / sf_base(Theta) ].
//
// Hazard and MRL each come in two algebraic routes (density/sf ratio and the
// conditional-expectation form); both are exposed so checks can compare them.
class ResidualMixture {
public:
    ResidualMixture(LifetimeDistribution baseline, MixingDistribution mixing,
                    double quad_tol = kDefaultQuadTol)
        : baseline_(std::move(baseline)), mixing_(std::move(mixing)), quad_tol_(quad_tol) {
        // The mixing mass must live where the baseline survival is positive;
        // probe the far quantile in log space.
        const double theta_hi = mixing_.quantile(1.0 - 1e-9);
        if (!std::isfinite(baseline_.log_sf(theta_hi)))
            throw std::invalid_argument("mixing mass extends beyond the baseline support: sf(" +
                                        detail::fmt_num(theta_hi) + ") = 0 for " + baseline_.label());
    }

    double sf(double x) const {
        check_x(x);
        const double v = mixing_.expect([this, x](double t) { return sf_ratio(x, t); }, quad_tol_);
        return std::fmin(std::fmax(v, 0.0), 1.0);
    }
    double cdf(double x) const { return 1.0 - sf(x); }

    double pdf(double x) const {
        check_x(x);
        const double v = mixing_.expect(
            [this, x](double t) {
                return std::exp(baseline_.log_pdf(x + t) - baseline_.log_sf(t));
            },
            quad_tol_);
        return std::fmax(v, 0.0);
    }

    // f*(x) / sf*(x)
    double hazard(double x) const { return pdf(x) / positive_sf(x, "hazard"); }

    // E[ r_base(x + Theta) | X* > x ]
    double hazard_conditional(double x) const {
        const double s = positive_sf(x, "hazard");
        const double v = mixing_.expect(
            [this, x](double t) { return baseline_.hazard(x + t) * sf_ratio(x, t); }, quad_tol_);
        return v / s;
    }

    double reversed_hazard(double x) const {
        const double c = cdf(x);
        if (!(c > 0.0)) throw std::domain_error("reversed hazard undefined at cdf = 0");
        return pdf(x) / c;
    }

    // integral of sf* over [x, inf), evaluated as E[ nu(x + Theta) / sf(Theta) ]
    double integrated_sf(double x) const {
        check_x(x);
        require_finite_baseline_mean();
        return mixing_.expect(
            [this, x](double t) {
                return std::exp(baseline_.log_integrated_sf(x + t) - baseline_.log_sf(t));
            },
            quad_tol_);
    }

    // integral-of-sf route
    double mrl(double x) const { return integrated_sf(x) / positive_sf(x, "mrl"); }

    // E[ m_base(x + Theta) | X* > x ]
    double mrl_conditional(double x) const {
        require_finite_baseline_mean();
        const double s = positive_sf(x, "mrl");
        const double v = mixing_.expect(
            [this, x](double t) { return baseline_.mrl(x + t) * sf_ratio(x, t); }, quad_tol_);
        return v / s;
    }

    // df of (Theta | X* > x)
    double conditional_age_cdf(double theta, double x) const {
        check_x(x);
        const double s = positive_sf(x, "conditional_age_cdf");
        const double v =
            mixing_.expect_below([this, x](double w) { return sf_ratio(x, w); }, theta, quad_tol_);
        return std::fmin(std::fmax(v / s, 0.0), 1.0);
    }

    // pdf of (Theta | X* = x); continuous mixing only
    double posterior_age_pdf(double theta, double x) const {
        check_x(x);
        if (!mixing_.has_density())
            throw std::domain_error("posterior age density needs a continuous mixing; "
                                    "use conditional atom masses instead");
        const double fx = pdf(x);
        if (!(fx > 0.0)) throw std::domain_error("posterior age density undefined at pdf = 0");
        const double num =
            std::exp(baseline_.log_pdf(x + theta) - baseline_.log_sf(theta)) * mixing_.pdf(theta);
        return num / fx;
    }

    // E(X*) via the tail integral of sf*; the authoritative route.
    double mean() const {
        require_finite_baseline_mean();
        const double outer_tol = std::fmax(10.0 * quad_tol_, 1e-8);
        return integrate_semi_infinite([this](double u) { return sf(u); }, outer_tol).value;
    }
    // E(X*) = E[ m_base(Theta) ], the conditional-age route.
    double mean_via_age_mrl() const {
        require_finite_baseline_mean();
        return mixing_.expect([this](double t) { return baseline_.mrl(t); }, quad_tol_);
    }

    const LifetimeDistribution& baseline() const { return baseline_; }
    const MixingDistribution& mixing() const { return mixing_; }
    double quad_tol() const { return quad_tol_; }
    std::string label() const { return "mixture[" + baseline_.label() + "; " + mixing_.label() + "]"; }

private:
    static void check_x(double x) {
        if (!(x >= 0.0)) throw std::domain_error("mixture quantities are defined for x >= 0");
    }
    double sf_ratio(double x, double t) const {
        return std::exp(baseline_.log_sf(x + t) - baseline_.log_sf(t));
    }
    double positive_sf(double x, const char* op) const {
        const double s = sf(x);
        if (s < 1e-14)
            throw std::domain_error(std::string(op) + ": mixture sf underflow at x = " +
                                    detail::fmt_num(x));
        return s;
    }
    void require_finite_baseline_mean() const {
        if (!baseline_.has_finite_mean())
            throw std::domain_error("operation requires a finite baseline mean: " + baseline_.label());
    }

    LifetimeDistribution baseline_;
    MixingDistribution mixing_;
    double quad_tol_;
};

// X* when the random age follows the equilibrium distribution of the baseline;
// distributed like the equilibrium variable itself.
inline ResidualMixture equilibrium_mixture(const LifetimeDistribution& baseline,
                                           double quad_tol = kDefaultQuadTol) {
    return ResidualMixture(baseline, MixingDistribution::continuous(equilibrium(baseline)), quad_tol);
}

} // namespace resilife
