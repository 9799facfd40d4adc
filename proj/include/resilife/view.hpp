#pragma once

#include <functional>
#include <string>
#include <utility>

#include "distributions.hpp"
#include "mixing.hpp"
#include "mixture.hpp"

namespace resilife {

// Uniform function-bundle over anything distribution-like (baselines, mixtures,
// mixing ages); order and aging checks consume these. Absent quantities are
// left empty and requesting them is an error.
struct DistributionView {
    std::string label;
    std::function<double(double)> sf;
    std::function<double(double)> cdf;
    std::function<double(double)> pdf;
    std::function<double(double)> hazard;
    std::function<double(double)> rhazard;
    std::function<double(double)> mrl;
    std::function<double(double)> isf; // integrated survival, int_x^inf sf
    std::function<double()> mean;
};

inline DistributionView make_view(const LifetimeDistribution& d) {
    DistributionView v;
    v.label = d.label();
    v.sf = [d](double x) { return d.sf(x); };
    v.cdf = [d](double x) { return d.cdf(x); };
    if (d.has_density()) {
        v.pdf = [d](double x) { return d.pdf(x); };
        v.hazard = [d](double x) { return d.hazard(x); };
        v.rhazard = [d](double x) { return d.reversed_hazard(x); };
    }
    if (d.has_finite_mean()) {
        v.mrl = [d](double x) { return d.mrl(x); };
        v.isf = [d](double x) { return d.integrated_sf(x); };
        v.mean = [d]() { return d.mean(); };
    }
    return v;
}

inline DistributionView make_view(const ResidualMixture& m) {
    DistributionView v;
    v.label = m.label();
    v.sf = [m](double x) { return m.sf(x); };
    v.cdf = [m](double x) { return m.cdf(x); };
    v.pdf = [m](double x) { return m.pdf(x); };
    v.hazard = [m](double x) { return m.hazard(x); };
    v.rhazard = [m](double x) { return m.reversed_hazard(x); };
    if (m.baseline().has_finite_mean()) {
        v.mrl = [m](double x) { return m.mrl(x); };
        v.isf = [m](double x) { return m.integrated_sf(x); };
        v.mean = [m]() { return m.mean(); };
    }
    return v;
}

inline DistributionView make_view(const MixingDistribution& m) {
    DistributionView v;
    v.label = m.label();
    v.sf = [m](double x) { return m.sf(x); };
    v.cdf = [m](double x) { return m.cdf(x); };
    if (m.has_density()) {
        v.pdf = [m](double x) { return m.pdf(x); };
        const LifetimeDistribution d = m.distribution();
        v.hazard = [d](double x) { return d.hazard(x); };
        v.rhazard = [d](double x) { return d.reversed_hazard(x); };
        if (d.has_finite_mean()) {
            v.mrl = [d](double x) { return d.mrl(x); };
            v.isf = [d](double x) { return d.integrated_sf(x); };
            v.mean = [d]() { return d.mean(); };
        }
    }
    return v;
}

} // namespace resilife
