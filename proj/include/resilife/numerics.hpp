#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resilife {

// Thrown when an integrand produces NaN.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when the evaluation budget is exhausted before the tolerance is met.
// Carries the partial estimate accumulated so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double partial, std::size_t evaluations)
        : std::runtime_error(what), partial_estimate(partial), evaluations(evaluations) {}
    double partial_estimate;
    std::size_t evaluations;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

enum class GridSpacing { Uniform, Geometric };

// Evaluation grid on [lo, hi]; abscissas are strictly increasing with
// first = lo and last = hi.
struct Grid {
    double lo;
    double hi;
    std::size_t points;
    GridSpacing spacing;

    static Grid uniform(double lo, double hi, std::size_t points) {
        return make(lo, hi, points, GridSpacing::Uniform);
    }
    static Grid geometric(double lo, double hi, std::size_t points) {
        return make(lo, hi, points, GridSpacing::Geometric);
    }

    std::vector<double> abscissas() const {
        std::vector<double> x(points);
        const std::size_t m = points - 1;
        if (spacing == GridSpacing::Uniform) {
            const double h = (hi - lo) / static_cast<double>(m);
            for (std::size_t i = 0; i < points; ++i) x[i] = lo + h * static_cast<double>(i);
        } else {
            const double r = std::log(hi / lo) / static_cast<double>(m);
            for (std::size_t i = 0; i < points; ++i) x[i] = lo * std::exp(r * static_cast<double>(i));
        }
        x.front() = lo;
        x.back() = hi;
        return x;
    }

private:
    static Grid make(double lo, double hi, std::size_t points, GridSpacing s) {
        if (!(lo >= 0.0)) throw std::invalid_argument("Grid: lo must be >= 0");
        if (!(hi > lo)) throw std::invalid_argument("Grid: hi must exceed lo");
        if (points < 3) throw std::invalid_argument("Grid: need at least 3 points");
        if (s == GridSpacing::Geometric && !(lo > 0.0))
            throw std::invalid_argument("Grid: geometric spacing requires lo > 0");
        return Grid{lo, hi, points, s};
    }
};

// Default grid for order/class checks.
inline Grid default_check_grid() { return Grid::uniform(1e-3, 20.0, 400); }

inline constexpr double kDefaultQuadTol = 1e-9;
inline constexpr double kDefaultMonotoneTol = 1e-7;
inline constexpr std::size_t kQuadratureBudget = 100000;

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK values).
inline constexpr double kGkNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
};

template <class F>
Panel gk15(const F& f, double a, double b, std::size_t& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fc = f(mid);
    evals += 1;
    if (std::isnan(fc)) throw EvaluationError("integrand returned NaN");
    double kron = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGkNodes[i];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        evals += 2;
        if (std::isnan(f1) || std::isnan(f2)) throw EvaluationError("integrand returned NaN");
        kron += kKronrodWeights[i] * (f1 + f2);
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
    }
    kron *= half;
    gauss *= half;
    double err = std::fabs(kron - gauss);
    if (!std::isfinite(kron)) err = std::numeric_limits<double>::infinity();
    return Panel{a, b, kron, err};
}

// Globally adaptive bisection over an initial partition of [a, b].
template <class F>
QuadratureResult adapt(const F& f, double a, double b, double tol, std::size_t seed_panels) {
    std::vector<Panel> panels;
    std::size_t evals = 0;
    const double width = (b - a) / static_cast<double>(seed_panels);
    for (std::size_t i = 0; i < seed_panels; ++i) {
        double lo = a + width * static_cast<double>(i);
        double hi = (i + 1 == seed_panels) ? b : a + width * static_cast<double>(i + 1);
        panels.push_back(gk15(f, lo, hi, evals));
    }
    auto total = [&panels]() {
        double v = 0.0, e = 0.0;
        for (const auto& p : panels) { v += p.value; e += p.error; }
        return std::pair<double, double>(v, e);
    };
    for (;;) {
        auto [value, error] = total();
        const double bound = std::fmax(tol * std::fabs(value), 1e-300);
        if (error <= bound) return QuadratureResult{value, error, evals};
        if (evals + 30 > kQuadratureBudget)
            throw QuadratureError("quadrature failure: evaluation budget exhausted", value, evals);
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel& x, const Panel& y) { return x.error < y.error; });
        Panel p = *worst;
        const double mid = 0.5 * (p.a + p.b);
        // A panel squeezed to the width where nodes collide signals an
        // unresolvable feature (a pole or jump), not convergence.
        if (!(p.a < mid && mid < p.b) ||
            p.b - p.a < 1e-14 * std::fmax(std::fabs(p.a), std::fabs(p.b)))
            throw QuadratureError("quadrature failure: interval below resolvable width", value, evals);
        panels.erase(worst);
        panels.push_back(gk15(f, p.a, mid, evals));
        panels.push_back(gk15(f, mid, p.b, evals));
    }
}

} // namespace detail

// Integral of `integrand` over [a, b]. The tolerance is relative with a hard
// absolute floor, so tail integrals keep relative accuracy.
inline QuadratureResult integrate_finite(const std::function<double(double)>& integrand,
                                         double a, double b, double tol = kDefaultQuadTol) {
    if (!(a <= b)) throw std::invalid_argument("integrate_finite: a must not exceed b");
    if (a == b) return QuadratureResult{0.0, 0.0, 0};
    return detail::adapt(integrand, a, b, tol, 2);
}

// Integral of `integrand` over [0, inf), via the compactifying substitution
// u = t / (1 + t) followed by adaptive Gauss-Kronrod refinement on [0, 1).
inline QuadratureResult integrate_semi_infinite(const std::function<double(double)>& integrand,
                                                double tol = kDefaultQuadTol) {
    auto mapped = [&integrand](double u) {
        const double w = 1.0 - u;
        const double t = u / w;
        const double v = integrand(t);
        if (v == 0.0) return 0.0;
        return v / (w * w);
    };
    return detail::adapt(mapped, 0.0, 1.0, tol, 4);
}

// Integral of `integrand` over [a, inf).
inline QuadratureResult integrate_tail(const std::function<double(double)>& integrand,
                                       double a, double tol = kDefaultQuadTol) {
    return integrate_semi_infinite([&integrand, a](double t) { return integrand(a + t); }, tol);
}

struct SignChangeBracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

// Scans the grid for a strict sign change of g and returns the first
// bracketing pair, whose endpoint values always have opposite signs. Exact
// zeros at grid points belong to neither sign and are skipped, so a root that
// falls on a grid point is still bracketed by its nonzero neighbors.
inline std::optional<SignChangeBracket> find_sign_change(const std::function<double(double)>& g,
                                                         const Grid& grid) {
    const auto x = grid.abscissas();
    double prev = 0.0, prev_x = 0.0;
    bool have_prev = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double cur = g(x[i]);
        if (std::isnan(cur)) throw EvaluationError("find_sign_change: NaN at grid point");
        if (cur == 0.0) continue;
        if (have_prev && prev * cur < 0.0) return SignChangeBracket{prev_x, x[i], prev, cur};
        prev = cur;
        prev_x = x[i];
        have_prev = true;
    }
    return std::nullopt;
}

enum class Direction { Increasing, Decreasing };

struct MonotoneVerdict {
    bool holds = true;
    std::optional<std::size_t> first_violation; // index of the offending element
    double max_violation = 0.0;
};

// Checks that `values` is monotone in `direction` up to an absolute tolerance
// per adjacent step; reports the first violating index and the worst violation.
inline MonotoneVerdict is_monotone(const std::vector<double>& values, Direction direction,
                                   double tol = kDefaultMonotoneTol) {
    if (values.size() < 2) throw std::invalid_argument("is_monotone: need at least 2 values");
    MonotoneVerdict v;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!std::isfinite(values[i - 1]) || !std::isfinite(values[i]))
            throw std::invalid_argument("is_monotone: values must be finite");
        const double step = values[i] - values[i - 1];
        const double violation = direction == Direction::Increasing ? -step : step;
        if (violation > tol && !v.first_violation) v.first_violation = i;
        v.max_violation = std::fmax(v.max_violation, violation);
    }
    v.holds = !v.first_violation.has_value();
    return v;
}

} // namespace resilife
