#pragma once

/// 1-D sampling with bracketed root finding and extremum location.  Hosts the
/// degeneracy-curve and W-curve scans; also provides the safeguarded Newton
/// used to invert monotone relations like s(T, v) = s.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "thermogeom/errors.hpp"

namespace thermogeom {

struct RootInfo {
    double bracket_lo = 0.0, bracket_hi = 0.0;
    double root = 0.0;
    double residual = 0.0;
};

struct ExtremumInfo {
    enum class Kind { minimum, maximum };
    double location = 0.0;
    double value = 0.0;
    Kind kind = Kind::minimum;
};

struct ScanResult {
    std::vector<std::pair<double, double>> samples;  // (parameter, value); value may be non-finite
    std::vector<RootInfo> roots;
    std::vector<ExtremumInfo> extrema;
};

/// Brent's method on a sign-changing bracket [a, b].  Stops when
/// |f| <= f_tol or the bracket shrinks to x_tol (plus a machine-precision
/// floor so large abscissae cannot stall the loop).
inline double brent_root(const std::function<double(double)>& f, double a, double b, double fa,
                         double fb, double x_tol, double f_tol) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw ValidationError("brent_root: bracket does not change sign");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 0.5 * x_tol + 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0 || std::abs(fb) <= f_tol) return b;
        if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
            d = m; e = m;  // bisection
        } else {
            double p, q;
            const double s = fb / fa;
            if (a == c) {  // secant
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {  // inverse quadratic interpolation
                const double qa = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d; d = p / q;
            } else {
                d = m; e = m;
            }
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = b - a; e = d; }
    }
    return b;
}

/// Uniformly sample f on [lo, hi]; bracket sign changes and refine them to
/// |f| <= 1e-12 * scale or bracket width <= 1e-12; locate extrema from sign
/// changes of a central-difference derivative, refined the same way.
/// Non-finite samples are recorded but excluded from bracketing.
inline ScanResult scan_1d(const std::function<double(double)>& f, double lo, double hi,
                          int n_samples) {
    if (!(lo < hi)) throw ValidationError("scan_1d: requires lo < hi");
    if (n_samples < 3) throw ValidationError("scan_1d: requires n_samples >= 3");

    ScanResult out;
    out.samples.reserve(n_samples);
    const double step = (hi - lo) / (n_samples - 1);
    for (int i = 0; i < n_samples; ++i) {
        const double x = (i == n_samples - 1) ? hi : lo + i * step;
        out.samples.emplace_back(x, f(x));
    }

    const double x_tol = 1e-12;
    // |f| tolerance uses the local bracket scale: a global one is hopeless
    // for integrands that diverge at the interval ends
    for (int i = 0; i + 1 < n_samples; ++i) {
        const auto [xa, va] = out.samples[i];
        const auto [xb, vb] = out.samples[i + 1];
        if (!std::isfinite(va) || !std::isfinite(vb)) continue;
        if (va == 0.0) {
            if (i == 0 || out.roots.empty() || out.roots.back().root != xa)
                out.roots.push_back({xa, xa, xa, 0.0});
            continue;
        }
        if (vb == 0.0) continue;  // captured when the next interval starts there
        if ((va > 0.0) != (vb > 0.0)) {
            const double f_tol = 1e-12 * std::max(std::abs(va), std::abs(vb));
            const double r = brent_root(f, xa, xb, va, vb, x_tol, f_tol);
            out.roots.push_back({xa, xb, r, f(r)});
        }
    }
    if (!out.samples.empty() && std::isfinite(out.samples.back().second) &&
        out.samples.back().second == 0.0)
        out.roots.push_back({hi, hi, hi, 0.0});

    // central-difference derivative at interior sample points
    std::vector<double> deriv(n_samples, std::numeric_limits<double>::quiet_NaN());
    for (int i = 1; i + 1 < n_samples; ++i) {
        const auto& [xm, vm] = out.samples[i - 1];
        const auto& [xp, vp] = out.samples[i + 1];
        if (std::isfinite(vm) && std::isfinite(vp)) deriv[i] = (vp - vm) / (xp - xm);
    }
    const double delta = std::max((hi - lo) * 1e-6, 1e-12);
    auto fd_deriv = [&](double x) { return (f(x + delta) - f(x - delta)) / (2.0 * delta); };

    // a sample landing exactly on an extremum shows up as deriv == 0
    for (int i = 2; i + 2 < n_samples; ++i) {
        const double dm = deriv[i - 1], d0 = deriv[i], dp = deriv[i + 1];
        if (!std::isfinite(dm) || !std::isfinite(d0) || !std::isfinite(dp)) continue;
        if (d0 != 0.0 || dm == 0.0 || dp == 0.0 || (dm > 0.0) == (dp > 0.0)) continue;
        ExtremumInfo e;
        e.location = out.samples[i].first;
        e.value = out.samples[i].second;
        e.kind = (dm < 0.0) ? ExtremumInfo::Kind::minimum : ExtremumInfo::Kind::maximum;
        out.extrema.push_back(e);
    }
    for (int i = 1; i + 2 < n_samples; ++i) {
        const double da = deriv[i], db = deriv[i + 1];
        if (!std::isfinite(da) || !std::isfinite(db)) continue;
        if (da == 0.0 || db == 0.0 || (da > 0.0) == (db > 0.0)) continue;
        double xa = std::max(out.samples[i].first, lo + delta);
        double xb = std::min(out.samples[i + 1].first, hi - delta);
        if (!(xa < xb)) continue;
        const double ga = fd_deriv(xa), gb = fd_deriv(xb);
        if (!std::isfinite(ga) || !std::isfinite(gb) || (ga > 0.0) == (gb > 0.0)) continue;
        const double r = brent_root(fd_deriv, xa, xb, ga, gb, x_tol,
                                    1e-12 * std::max(std::abs(ga), std::abs(gb)));
        ExtremumInfo e;
        e.location = r;
        e.value = f(r);
        e.kind = (da < 0.0) ? ExtremumInfo::Kind::minimum : ExtremumInfo::Kind::maximum;
        out.extrema.push_back(e);
    }
    return out;
}

/// Solve g(t) = 0 for strictly increasing g by Newton with a bisection
/// safeguard inside [lo, hi]; converges to |dt| <= rel_tol * |t|.  The tight
/// default matters: finite-difference stencils divide these values by h^3.
inline double newton_bisect(const std::function<double(double)>& g,
                            const std::function<double(double)>& dg, double lo, double hi,
                            double rel_tol = 1e-15) {
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if (glo > 0.0 || ghi < 0.0)
        throw DomainError("newton_bisect: root not bracketed by [lo, hi]");
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 120; ++iter) {
        const double gt = g(t);
        if (gt == 0.0) return t;
        if (gt > 0.0) hi = t; else lo = t;
        const double d = dg(t);
        double step = (d != 0.0) ? -gt / d : std::numeric_limits<double>::infinity();
        double next = t + step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // fall back to bisection
        if (std::abs(next - t) <= rel_tol * std::abs(next)) return next;
        t = next;
    }
    return t;
}

}  // namespace thermogeom
