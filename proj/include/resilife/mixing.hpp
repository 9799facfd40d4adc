#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "distributions.hpp"
#include "numerics.hpp"

namespace resilife {

// Free-standing order statistic evaluations (kth smallest of n iid draws).
inline double os_cdf(const LifetimeDistribution& base, int k, int n, double t) {
    detail::OrderStatisticDist os(base.impl_ptr(), k, n);
    return std::exp(os.log_cdf(t));
}
inline double os_pdf(const LifetimeDistribution& base, int k, int n, double t) {
    detail::OrderStatisticDist os(base.impl_ptr(), k, n);
    return std::exp(os.log_pdf(t));
}

// The random age variable: degenerate, finitely supported, continuous, or the
// kth order statistic of a base lifetime. One expectation functional serves
// all variants; discrete expectations are exact sums.
class MixingDistribution {
public:
    enum class Kind { Degenerate, DiscreteAtoms, Continuous, OrderStatistic };

    static MixingDistribution degenerate(double theta0) {
        if (!(theta0 >= 0.0)) throw std::invalid_argument("degenerate: age must be >= 0");
        MixingDistribution m(Kind::Degenerate);
        m.atoms_ = {{theta0, 1.0}};
        return m;
    }

    static MixingDistribution atoms(std::vector<std::pair<double, double>> atom_list) {
        if (atom_list.empty()) throw std::invalid_argument("atoms: need at least one atom");
        double sum = 0.0;
        for (std::size_t i = 0; i < atom_list.size(); ++i) {
            const auto& [theta, p] = atom_list[i];
            if (!(theta >= 0.0)) throw std::invalid_argument("atoms: ages must be >= 0");
            if (!(p > 0.0)) throw std::invalid_argument("atoms: weights must be positive");
            if (i > 0 && !(theta > atom_list[i - 1].first))
                throw std::invalid_argument("atoms: ages must be strictly increasing");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("atoms: weights must sum to 1");
        MixingDistribution m(Kind::DiscreteAtoms);
        m.atoms_ = std::move(atom_list);
        return m;
    }

    static MixingDistribution continuous(LifetimeDistribution dist) {
        MixingDistribution m(Kind::Continuous);
        m.dist_ = std::move(dist);
        return m;
    }

    static MixingDistribution order_statistic(const LifetimeDistribution& base, int k, int n) {
        MixingDistribution m(Kind::OrderStatistic);
        m.dist_ = resilife::order_statistic(base, k, n);
        m.os_base_label_ = base.label();
        m.os_k_ = k;
        m.os_n_ = n;
        return m;
    }

    Kind kind() const { return kind_; }
    bool is_discrete() const {
        return kind_ == Kind::Degenerate || kind_ == Kind::DiscreteAtoms;
    }
    bool has_density() const { return !is_discrete(); }

    // E[g(Theta)]
    double expect(const std::function<double(double)>& g, double tol = kDefaultQuadTol) const {
        if (is_discrete()) {
            double s = 0.0;
            for (const auto& [theta, p] : atoms_) s += p * g(theta);
            return s;
        }
        return integrate_semi_infinite([this, &g](double t) { return weighted(g, t); }, tol).value;
    }

    // E[g(Theta) 1{Theta <= hi}]
    double expect_below(const std::function<double(double)>& g, double hi,
                        double tol = kDefaultQuadTol) const {
        if (hi < 0.0) return 0.0;
        if (is_discrete()) {
            double s = 0.0;
            for (const auto& [theta, p] : atoms_)
                if (theta <= hi) s += p * g(theta);
            return s;
        }
        return integrate_finite([this, &g](double t) { return weighted(g, t); }, 0.0, hi, tol).value;
    }

    // E[g(Theta) 1{Theta >= lo}]
    double expect_tail(const std::function<double(double)>& g, double lo,
                       double tol = kDefaultQuadTol) const {
        if (lo <= 0.0) return expect(g, tol);
        if (is_discrete()) {
            double s = 0.0;
            for (const auto& [theta, p] : atoms_)
                if (theta >= lo) s += p * g(theta);
            return s;
        }
        return integrate_tail([this, &g](double t) { return weighted(g, t); }, lo, tol).value;
    }

    double cdf(double theta) const {
        if (is_discrete()) {
            double s = 0.0;
            for (const auto& [t, p] : atoms_)
                if (t <= theta) s += p;
            return s;
        }
        return dist_->cdf(theta);
    }
    double sf(double theta) const {
        if (is_discrete()) return 1.0 - cdf(theta);
        return dist_->sf(theta);
    }
    double pdf(double theta) const {
        if (is_discrete())
            throw std::domain_error("pdf undefined for discrete mixing: " + label());
        return dist_->pdf(theta);
    }

    double quantile(double p) const {
        if (is_discrete()) {
            double acc = 0.0;
            for (const auto& [theta, w] : atoms_) {
                acc += w;
                if (acc >= p - 1e-15) return theta;
            }
            return atoms_.back().first;
        }
        return dist_->quantile(p);
    }

    const std::vector<std::pair<double, double>>& atom_list() const {
        if (!is_discrete()) throw std::logic_error("atom_list: not a discrete mixing");
        return atoms_;
    }
    const LifetimeDistribution& distribution() const {
        if (is_discrete()) throw std::logic_error("distribution: discrete mixing has no density model");
        return *dist_;
    }

    std::string label() const {
        switch (kind_) {
            case Kind::Degenerate:
                return "degenerate(" + detail::fmt_num(atoms_[0].first) + ")";
            case Kind::DiscreteAtoms: {
                std::string s = "atoms(";
                for (std::size_t i = 0; i < atoms_.size(); ++i) {
                    if (i) s += ",";
                    s += detail::fmt_num(atoms_[i].first) + ":" + detail::fmt_num(atoms_[i].second);
                }
                return s + ")";
            }
            case Kind::Continuous:
                return "cont(" + dist_->label() + ")";
            case Kind::OrderStatistic:
                return "os(" + os_base_label_ + "," + std::to_string(os_k_) + "," +
                       std::to_string(os_n_) + ")";
        }
        return "?";
    }

private:
    explicit MixingDistribution(Kind k) : kind_(k) {}

    double weighted(const std::function<double(double)>& g, double t) const {
        const double h = dist_->pdf(t);
        if (h == 0.0) return 0.0;
        return g(t) * h;
    }

    Kind kind_;
    std::vector<std::pair<double, double>> atoms_;
    std::optional<LifetimeDistribution> dist_;
    std::string os_base_label_;
    int os_k_ = 0, os_n_ = 0;
};

} // namespace resilife
