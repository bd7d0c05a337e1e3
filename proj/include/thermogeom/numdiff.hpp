#pragma once

/// Central-finite-difference third-order jets with one Richardson
/// extrapolation level.  This is the numerical oracle the analytic surfaces
/// are checked against; everything here is deterministic for equal inputs.

#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "thermogeom/errors.hpp"
#include "thermogeom/jet.hpp"

namespace thermogeom {

namespace detail {

/// Evaluates f on stencil points addressed by integer offsets in units of
/// h_i/2 per axis, memoized so shared points are computed once.
class StencilEval {
  public:
    StencilEval(const std::function<double(const std::vector<double>&)>& f,
                const std::vector<double>& x, const std::vector<double>& half_steps)
        : f_(f), x_(x), half_(half_steps) {}

    double operator()(const std::vector<int>& offsets) {
        auto it = cache_.find(offsets);
        if (it != cache_.end()) return it->second;
        std::vector<double> p = x_;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += offsets[i] * half_[i];
        const double v = f_(p);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "fd_jet3: non-finite value at stencil point (";
            for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
            os << ")";
            throw DomainError(os.str());
        }
        cache_.emplace(offsets, v);
        return v;
    }

  private:
    const std::function<double(const std::vector<double>&)>& f_;
    std::vector<double> x_;
    std::vector<double> half_;
    std::map<std::vector<int>, double> cache_;
};

/// One level of Richardson extrapolation for an O(h^2) central estimate.
inline double richardson(double d_h, double d_half) { return (4.0 * d_half - d_h) / 3.0; }

}  // namespace detail

/// Third-order jet of f at x by central differences on per-axis steps
/// h_i = h * max(1, |x_i|), each estimate combined at h and h/2.
/// f must be evaluable on the stencil box x +- 2 h_i per axis.
inline Jet3 fd_jet3(const std::function<double(const std::vector<double>&)>& f,
                    const std::vector<double>& x, double base_step = 1e-3) {
    if (base_step <= 0.0) throw ValidationError("fd_jet3: base step must be positive");
    const int n = static_cast<int>(x.size());
    if (n < 1) throw ValidationError("fd_jet3: empty point");

    std::vector<double> h(n), half(n);
    for (int i = 0; i < n; ++i) {
        h[i] = base_step * std::max(1.0, std::abs(x[i]));
        half[i] = 0.5 * h[i];  // offsets below are integers in units of h_i/2
    }
    detail::StencilEval eval(f, x, half);

    auto off = [n](std::initializer_list<std::pair<int, int>> axes) {
        std::vector<int> o(n, 0);
        for (auto [axis, steps] : axes) o[axis] = steps;
        return o;
    };

    Jet3 jet(n);
    jet.value = eval(off({}));
    const double f0 = jet.value;

    // s = 1 uses step h_i (2 half-units), s = 2 uses h_i/2 (1 half-unit).
    auto grad_est = [&](int i, int u) {
        const double hi = u * half[i];
        return (eval(off({{i, u}})) - eval(off({{i, -u}}))) / (2.0 * hi);
    };
    auto hess_diag_est = [&](int i, int u) {
        const double hi = u * half[i];
        return (eval(off({{i, u}})) - 2.0 * f0 + eval(off({{i, -u}}))) / (hi * hi);
    };
    auto hess_cross_est = [&](int i, int j, int u) {
        const double hi = u * half[i], hj = u * half[j];
        return (eval(off({{i, u}, {j, u}})) - eval(off({{i, u}, {j, -u}})) -
                eval(off({{i, -u}, {j, u}})) + eval(off({{i, -u}, {j, -u}}))) /
               (4.0 * hi * hj);
    };
    auto third_diag_est = [&](int i, int u) {
        const double hi = u * half[i];
        return (eval(off({{i, 2 * u}})) - 2.0 * eval(off({{i, u}})) + 2.0 * eval(off({{i, -u}})) -
                eval(off({{i, -2 * u}}))) /
               (2.0 * hi * hi * hi);
    };
    // d^3 f / dx_i^2 dx_j, i != j
    auto third_iij_est = [&](int i, int j, int u) {
        const double hi = u * half[i], hj = u * half[j];
        const double plus = eval(off({{i, u}, {j, u}})) - 2.0 * eval(off({{j, u}})) +
                            eval(off({{i, -u}, {j, u}}));
        const double minus = eval(off({{i, u}, {j, -u}})) - 2.0 * eval(off({{j, -u}})) +
                             eval(off({{i, -u}, {j, -u}}));
        return (plus - minus) / (2.0 * hi * hi * hj);
    };
    auto third_ijk_est = [&](int i, int j, int k, int u) {
        const double hi = u * half[i], hj = u * half[j], hk = u * half[k];
        double acc = 0.0;
        for (int si = -1; si <= 1; si += 2)
            for (int sj = -1; sj <= 1; sj += 2)
                for (int sk = -1; sk <= 1; sk += 2)
                    acc += si * sj * sk * eval(off({{i, si * u}, {j, sj * u}, {k, sk * u}}));
        return acc / (8.0 * hi * hj * hk);
    };

    for (int i = 0; i < n; ++i) jet.grad[i] = detail::richardson(grad_est(i, 2), grad_est(i, 1));

    for (int i = 0; i < n; ++i) {
        jet.hess(i, i) = detail::richardson(hess_diag_est(i, 2), hess_diag_est(i, 1));
        for (int j = i + 1; j < n; ++j) {
            const double v = detail::richardson(hess_cross_est(i, j, 2), hess_cross_est(i, j, 1));
            jet.hess(i, j) = v;
            jet.hess(j, i) = v;
        }
    }

    auto assign_third = [&](int i, int j, int k, double v) {
        jet.third(i, j, k) = v;
        jet.third(i, k, j) = v;
        jet.third(j, i, k) = v;
        jet.third(j, k, i) = v;
        jet.third(k, i, j) = v;
        jet.third(k, j, i) = v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                double v;
                if (i == j && j == k)
                    v = detail::richardson(third_diag_est(i, 2), third_diag_est(i, 1));
                else if (i == j)
                    v = detail::richardson(third_iij_est(i, k, 2), third_iij_est(i, k, 1));
                else if (j == k)
                    v = detail::richardson(third_iij_est(j, i, 2), third_iij_est(j, i, 1));
                else
                    v = detail::richardson(third_ijk_est(i, j, k, 2), third_ijk_est(i, j, k, 1));
                assign_third(i, j, k, v);
            }

    jet.symmetrize();
    return jet;
}

inline Jet3 fd_jet3(const std::function<double(const std::vector<double>&)>& f,
                    const StatePoint& x, double base_step = 1e-3) {
    return fd_jet3(f, x.values, base_step);
}

/// Finite-difference surface over a scalar value function.
inline PotentialSurface make_fd_surface(int dim, std::string chart,
                                        std::vector<std::string> coord_names,
                                        std::function<double(const std::vector<double>&)> value,
                                        std::function<bool(const std::vector<double>&)> domain = nullptr,
                                        double base_step = 1e-3) {
    PotentialSurface s;
    s.dim = dim;
    s.chart = std::move(chart);
    s.kind = JetKind::finite_difference;
    s.coord_names = std::move(coord_names);
    s.domain = std::move(domain);
    s.evaluator = [value = std::move(value), base_step](const std::vector<double>& x) {
        return fd_jet3(value, x, base_step);
    };
    return s;
}

}  // namespace thermogeom
