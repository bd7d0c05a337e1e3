#pragma once

/// Single-component closed gases: Ideal, van der Waals, Berthelot.
/// Equations of state, energy surfaces u(s,v), Weinhold metrics with
/// chain-rule third derivatives, response functions, spinodal curves,
/// critical points, closed-form scalar curvatures and the reduced p-T
/// phase boundary.
///
/// The internal chart is (T,v); the (s,v) chart is reached through
/// s(T,v) = c_v ln(T/T0) + R ln((v-b)/(v0-b)) + s0 (ideal/vdW; Berthelot
/// gains a -a/(T^2 v) term).  Entropy reference constants are unobservable
/// in every metric or curvature, which depend on derivatives only.

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "thermogeom/errors.hpp"
#include "thermogeom/jet.hpp"
#include "thermogeom/metric.hpp"
#include "thermogeom/numdiff.hpp"
#include "thermogeom/scan.hpp"
#include "thermogeom/standard_state.hpp"

namespace thermogeom {

enum class GasType { ideal, van_der_waals, berthelot };

inline const char* to_string(GasType t) {
    switch (t) {
        case GasType::ideal: return "ideal";
        case GasType::van_der_waals: return "vdw";
        case GasType::berthelot: return "berthelot";
    }
    return "?";
}

struct ReferenceState {
    double T0 = 1.0, v0 = 1.0, s0 = 0.0;
};

struct GasState {
    double T = 0.0;  // temperature
    double v = 0.0;  // molar volume
};

struct ResponseFunctions {
    double c_p = 0.0;    // molar heat capacity at constant pressure
    double alpha = 0.0;  // thermal expansion coefficient
    double k_T = 0.0;    // isothermal compressibility
};

struct CriticalPoint {
    double p = 0.0, T = 0.0, v = 0.0;
};

/// Spinodal locus as parametric curves of v.  `exists` is false for models
/// with no curve of degeneracy (ideal, or a = 0).
struct SpinodalCurves {
    bool exists = false;
    double v_min = 0.0;  // curves defined for v > v_min
    std::function<double(double)> pressure;
    std::function<double(double)> temperature;
    std::function<double(double)> entropy;
};

class GasModel {
  public:
    GasModel(GasType type, double a, double b, double R, double c_v, ReferenceState ref = {})
        : type_(type), a_(a), b_(b), R_(R), c_v_(c_v), ref_(ref) {
        if (a < 0.0 || b < 0.0) throw ValidationError("GasModel: a and b must be non-negative");
        if (R <= 0.0 || c_v <= 0.0) throw ValidationError("GasModel: R and c_v must be positive");
        if (type == GasType::ideal && (a != 0.0 || b != 0.0))
            throw ValidationError("GasModel: ideal gas has no a or b");
    }

    static GasModel ideal(double R, double c_v, ReferenceState ref = {}) {
        return GasModel(GasType::ideal, 0.0, 0.0, R, c_v, ref);
    }
    static GasModel van_der_waals(double a, double b, double R, double c_v,
                                  ReferenceState ref = {}) {
        return GasModel(GasType::van_der_waals, a, b, R, c_v, ref);
    }
    static GasModel berthelot(double a, double b, double R, double c_v, ReferenceState ref = {}) {
        return GasModel(GasType::berthelot, a, b, R, c_v, ref);
    }

    GasType type() const { return type_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double R() const { return R_; }
    double c_v() const { return c_v_; }
    const ReferenceState& ref() const { return ref_; }

    /// v > b (v > 0 for ideal) and T > 0.
    void check_state(double T, double v) const {
        if (!(T > 0.0)) throw DomainError(describe_state("temperature must be positive", T, v));
        if (!(v > b_)) throw DomainError(describe_state("molar volume must exceed b", T, v));
    }

    double pressure(double T, double v) const {
        check_state(T, v);
        switch (type_) {
            case GasType::ideal: return R_ * T / v;
            case GasType::van_der_waals: return R_ * T / (v - b_) - a_ / (v * v);
            case GasType::berthelot: return R_ * T / (v - b_) - a_ / (T * v * v);
        }
        return 0.0;
    }
    double pressure(GasState st) const { return pressure(st.T, st.v); }

    double dp_dT(double T, double v) const {
        check_state(T, v);
        if (type_ == GasType::berthelot) return R_ / (v - b_) + a_ / (T * T * v * v);
        return R_ / (v - b_);
    }
    double dp_dv(double T, double v) const {
        check_state(T, v);
        const double w = v - b_;
        if (type_ == GasType::berthelot) return -R_ * T / (w * w) + 2.0 * a_ / (T * v * v * v);
        return -R_ * T / (w * w) + 2.0 * a_ / (v * v * v);
    }
    double d2p_dT2(double T, double v) const {
        check_state(T, v);
        if (type_ == GasType::berthelot) return -2.0 * a_ / (T * T * T * v * v);
        return 0.0;
    }
    double d2p_dTdv(double T, double v) const {
        check_state(T, v);
        const double w = v - b_;
        if (type_ == GasType::berthelot)
            return -R_ / (w * w) - 2.0 * a_ / (T * T * v * v * v);
        return -R_ / (w * w);
    }
    double d2p_dv2(double T, double v) const {
        check_state(T, v);
        const double w = v - b_;
        if (type_ == GasType::berthelot)
            return 2.0 * R_ * T / (w * w * w) - 6.0 * a_ / (T * v * v * v * v);
        return 2.0 * R_ * T / (w * w * w) - 6.0 * a_ / (v * v * v * v);
    }

    double entropy(double T, double v) const {
        check_state(T, v);
        const double base = c_v_ * std::log(T / ref_.T0) +
                            R_ * std::log((v - b_) / (ref_.v0 - b_)) + ref_.s0;
        if (type_ == GasType::berthelot)
            return base - a_ / (T * T * v) + a_ / (ref_.T0 * ref_.T0 * ref_.v0);
        return base;
    }
    double entropy(GasState st) const { return entropy(st.T, st.v); }

    /// Invert s(T, v) = s.  Closed form except for Berthelot, where the
    /// monotone relation is solved by safeguarded Newton to rel 1e-12.
    double temperature_sv(double s, double v) const {
        if (!(v > b_)) throw DomainError(describe_state("molar volume must exceed b", 0.0, v));
        const double q = R_ / c_v_;
        if (type_ != GasType::berthelot)
            return ref_.T0 * std::pow((ref_.v0 - b_) / (v - b_), q) *
                   std::exp((s - ref_.s0) / c_v_);
        auto g = [&](double T) { return entropy(T, v) - s; };
        auto dg = [&](double T) { return c_v_ / T + 2.0 * a_ / (T * T * T * v); };
        double t_lo = ref_.T0, t_hi = ref_.T0;
        for (int i = 0; i < 600 && g(t_lo) > 0.0; ++i) t_lo *= 0.25;
        for (int i = 0; i < 600 && g(t_hi) < 0.0; ++i) t_hi *= 4.0;
        return newton_bisect(g, dg, t_lo, t_hi);
    }

    /// u(T, v); the Berthelot form c_v T - 2a/(Tv) is the one consistent with
    /// this model's s(T, v).
    double internal_energy(double T, double v) const {
        check_state(T, v);
        switch (type_) {
            case GasType::ideal: return c_v_ * T;
            case GasType::van_der_waals: return c_v_ * T - a_ / v;
            case GasType::berthelot: return c_v_ * T - 2.0 * a_ / (T * v);
        }
        return 0.0;
    }

  private:
    std::string describe_state(const char* msg, double T, double v) const {
        std::ostringstream os;
        os << to_string(type_) << " gas: " << msg << " (T = " << T << ", v = " << v << ")";
        return os.str();
    }

    GasType type_;
    double a_, b_, R_, c_v_;
    ReferenceState ref_;
};

/// Weinhold metric on the (s,v) chart from the model's closed-form entries
///
///   eta = [ T/c_v                -(T/c_v)(dp/dT)                    ]
///         [ -(T/c_v)(dp/dT)      -(dp/dv) + (T/c_v)(dp/dT)^2       ]
///
/// as functions of (T,v); eta_ij,m follows by the chain rule
/// d/ds|_v = (T/c_v) d/dT,  d/dv|_s = d/dv|_T - (T (dp/dT)/c_v) d/dT,
/// then permutation symmetrization (the Berthelot constant-c_v entries are
/// not an exact Hessian, so its raw chain-rule thirds are asymmetric).
inline MetricValue weinhold_metric(const GasModel& model, GasState st) {
    const double T = st.T, v = st.v;
    model.check_state(T, v);
    const double cv = model.c_v();
    const double pT = model.dp_dT(T, v), pv = model.dp_dv(T, v);
    const double pTT = model.d2p_dT2(T, v), pTv = model.d2p_dTdv(T, v),
                 pvv = model.d2p_dv2(T, v);

    Matrix g(2, 2);
    g(0, 0) = T / cv;
    g(0, 1) = g(1, 0) = -(T / cv) * pT;
    g(1, 1) = -pv + (T / cv) * pT * pT;

    const double dT_g11 = 1.0 / cv, dv_g11 = 0.0;
    const double dT_g12 = -(pT + T * pTT) / cv, dv_g12 = -(T / cv) * pTv;
    const double dT_g22 = -pTv + (pT * pT + 2.0 * T * pT * pTT) / cv;
    const double dv_g22 = -pvv + (2.0 * T / cv) * pT * pTv;

    auto d_ds = [&](double dT) { return (T / cv) * dT; };
    auto d_dv = [&](double dT, double dv) { return dv - (T * pT / cv) * dT; };

    Tensor3 dg(2);
    dg(0, 0, 0) = d_ds(dT_g11);
    dg(0, 0, 1) = d_dv(dT_g11, dv_g11);
    dg(0, 1, 0) = dg(1, 0, 0) = d_ds(dT_g12);
    dg(0, 1, 1) = dg(1, 0, 1) = d_dv(dT_g12, dv_g12);
    dg(1, 1, 0) = d_ds(dT_g22);
    dg(1, 1, 1) = d_dv(dT_g22, dv_g22);

    StatePoint point("(s,v)", {"s", "v"}, {model.entropy(T, v), v});
    return MetricValue(std::move(g), std::move(dg), std::move(point));  // symmetrizes
}

/// alpha and k_T from analytic EOS derivatives; c_p from the thermodynamic
/// identity c_p - c_v = -T (dp/dT)^2 / (dp/dv).  Requires mechanical
/// stability (dp/dv)_T < 0.
inline ResponseFunctions response_functions(const GasModel& model, GasState st) {
    const double pT = model.dp_dT(st.T, st.v);
    const double pv = model.dp_dv(st.T, st.v);
    if (!(pv < 0.0)) {
        std::ostringstream os;
        os << to_string(model.type()) << " gas: (dp/dv)_T = " << pv << " >= 0 at (T = " << st.T
           << ", v = " << st.v << "); k_T is undefined on or past the spinodal";
        throw UnstableStateError(os.str());
    }
    ResponseFunctions r;
    r.alpha = -pT / (st.v * pv);
    r.k_T = -1.0 / (st.v * pv);
    r.c_p = model.c_v() - st.T * pT * pT / pv;
    return r;
}

/// Degeneracy curves (dp/dv)_T = 0 in the forms p(v), T(v), s(v).
inline SpinodalCurves spinodal(const GasModel& model) {
    SpinodalCurves curves;
    if (model.type() == GasType::ideal || model.a() == 0.0) return curves;  // no curve
    const double a = model.a(), b = model.b(), R = model.R();
    curves.exists = true;
    curves.v_min = b;
    if (model.type() == GasType::van_der_waals) {
        curves.temperature = [a, b, R](double v) { return 2.0 * a * (v - b) * (v - b) / (R * v * v * v); };
        curves.pressure = [a, b](double v) { return (v - 2.0 * b) * a / (v * v * v); };
    } else {
        auto T_of = [a, b, R](double v) {
            return std::sqrt(2.0 * a * (v - b) * (v - b) / (R * v * v * v));
        };
        curves.temperature = T_of;
        curves.pressure = [a, b, T_of](double v) { return a * (v - 2.0 * b) / (T_of(v) * v * v * v); };
    }
    auto T_of = curves.temperature;
    curves.entropy = [model, T_of](double v) { return model.entropy(T_of(v), v); };
    return curves;
}

/// Both signs of the Berthelot critical square roots; index 0 is the
/// physical positive branch.  vdW and ideal have a single physical branch.
inline std::vector<CriticalPoint> critical_point_branches(const GasModel& model) {
    const double a = model.a(), b = model.b(), R = model.R();
    if (model.type() == GasType::ideal)
        throw DomainError("ideal gas: no critical point (no curve of degeneracy)");
    if (!(a > 0.0 && b > 0.0))
        throw DomainError("critical point requires a > 0 and b > 0");
    if (model.type() == GasType::van_der_waals)
        return {{a / (27.0 * b * b), 8.0 * a / (27.0 * b * R), 3.0 * b}};
    const double pc = std::sqrt(a * R / (216.0 * b * b * b));
    const double Tc = std::sqrt(8.0 * a / (27.0 * R * b));
    return {{pc, Tc, 3.0 * b}, {-pc, -Tc, 3.0 * b}};
}

/// Closed-form critical point, cross-checked against the numeric extremum of
/// the spinodal p(v) located by scan_1d.
inline CriticalPoint critical_point(const GasModel& model) {
    const CriticalPoint cp = critical_point_branches(model).front();
    const SpinodalCurves curves = spinodal(model);
    const double b = model.b();
    const ScanResult scan = scan_1d(curves.pressure, 1.2 * b, 8.0 * b, 401);
    bool verified = false;
    for (const auto& e : scan.extrema) {
        if (e.kind != ExtremumInfo::Kind::maximum) continue;
        if (std::abs(e.location - cp.v) <= 1e-6 * cp.v && std::abs(e.value - cp.p) <= 1e-6 * std::abs(cp.p))
            verified = true;
    }
    if (!verified)
        throw ConsistencyError("critical_point: closed form disagrees with the numeric extremum of the spinodal p(v)");
    return cp;
}

namespace detail {

inline double berthelot_L_poly(double cv, double R, double b, double v) {
    return (2.0 * cv - R) * v * v - 3.0 * cv * b * v + cv * b * b;
}
inline double berthelot_Q_poly(double cv, double R, double b, double v) {
    return -R * std::pow(v, 5) + 3.0 * R * b * std::pow(v, 4) - 3.0 * R * b * b * std::pow(v, 3) +
           (R * b * b * b + cv + R) * v * v - b * (b - 2.0 * v) * (R + cv);
}
inline double berthelot_W_poly(double cv, double R, double b, double v) {
    return -R * std::pow(v, 7) + 4.0 * R * b * std::pow(v, 6) -
           6.0 * R * b * b * std::pow(v, 5) + (2.0 * cv + R + 4.0 * R * b * b * b) * std::pow(v, 4) -
           (8.0 * cv + 3.0 * R + R * b * b * b) * b * std::pow(v, 3) +
           (12.0 * cv + 3.0 * R) * b * b * v * v - (8.0 * cv + R) * b * b * b * v +
           2.0 * cv * std::pow(b, 4);
}

inline void guard_divergence(double denom, double scale, const char* what) {
    if (std::abs(denom) <= 1e-14 * scale) {
        std::ostringstream os;
        os << what << ": scalar curvature diverges on the degeneracy curve (denominator = "
           << denom << ")";
        throw DivergenceError(os.str(), denom);
    }
}

}  // namespace detail

/// Closed-form scalar curvature of the Weinhold metric: 0 for the ideal gas,
/// a R v^3 / (c_v (p v^3 - a v + 2 a b)^2) for van der Waals, and the printed
/// Berthelot rational form (kept verbatim; see curvature reports for how it
/// compares against the numeric pipeline).
inline double curvature_closed_form(const GasModel& model, GasState st) {
    const double T = st.T, v = st.v;
    model.check_state(T, v);
    const double a = model.a(), b = model.b(), R = model.R(), cv = model.c_v();
    switch (model.type()) {
        case GasType::ideal:
            return 0.0;
        case GasType::van_der_waals: {
            const double p = model.pressure(T, v);
            const double denom = p * v * v * v - a * v + 2.0 * a * b;
            const double scale = std::max({std::abs(p * v * v * v), std::abs(a * v),
                                           std::abs(2.0 * a * b), 1e-300});
            detail::guard_divergence(denom, scale, "vdW curvature");
            return a * R * v * v * v / (cv * denom * denom);
        }
        case GasType::berthelot: {
            const double denom = R * T * T * v * v * v - 2.0 * a * (v - b) * (v - b);
            const double scale = std::max({std::abs(R * T * T * v * v * v),
                                           std::abs(2.0 * a * (v - b) * (v - b)), 1e-300});
            detail::guard_divergence(denom, scale, "Berthelot curvature");
            const double L = detail::berthelot_L_poly(cv, R, b, v);
            const double Q = detail::berthelot_Q_poly(cv, R, b, v);
            const double W = detail::berthelot_W_poly(cv, R, b, v);
            const double num = std::pow(T, 4) * std::pow(v, 4) * R * cv * L +
                               T * T * v * v * v * R * a * Q + a * a * W;
            return 2.0 * a * num / (cv * cv * cv * T * T * T * v * denom * denom);
        }
    }
    return 0.0;
}

/// u(s,v) value function; Berthelot inverts s(T,v) per evaluation.
inline std::function<double(const std::vector<double>&)> energy_value_fn(const GasModel& model) {
    return [model](const std::vector<double>& x) {
        const double T = model.temperature_sv(x[0], x[1]);
        return model.internal_energy(T, x[1]);
    };
}

/// Energy surface u(s,v): closed-form jets for ideal/vdW, finite-difference
/// backed for Berthelot (T(s,v) has no closed form there).
inline PotentialSurface energy_surface(const GasModel& model, double fd_base_step = 1e-3) {
    const double b = model.b();
    auto domain = [b](const std::vector<double>& x) { return x[1] > b; };
    if (model.type() == GasType::berthelot)
        return make_fd_surface(2, "(s,v)", {"s", "v"}, energy_value_fn(model), domain,
                               fd_base_step);

    const double a = model.a(), cv = model.c_v(), q = model.R() / cv;
    auto jet_fn = [model, a, b, cv, q](const std::vector<double>& x) {
        const double s = x[0], v = x[1];
        const double T = model.temperature_sv(s, v);
        const double w = v - b;
        // j s-derivatives and m v-derivatives of c_v T(s,v):
        //   c_v T (1/c_v)^j prod_{t<m} (-q - t) / w^m
        auto dT = [&](int j, int m) {
            double r = cv * T * std::pow(1.0 / cv, j) / std::pow(w, m);
            for (int t = 0; t < m; ++t) r *= -(q + t);
            return r;
        };
        Jet3 jet(2);
        jet.value = dT(0, 0) - (a != 0.0 ? a / v : 0.0);
        jet.grad[0] = dT(1, 0);
        jet.grad[1] = dT(0, 1) + a / (v * v);
        jet.hess(0, 0) = dT(2, 0);
        jet.hess(0, 1) = jet.hess(1, 0) = dT(1, 1);
        jet.hess(1, 1) = dT(0, 2) - 2.0 * a / (v * v * v);
        jet.third(0, 0, 0) = dT(3, 0);
        const double ssv = dT(2, 1), svv = dT(1, 2);
        jet.third(0, 0, 1) = jet.third(0, 1, 0) = jet.third(1, 0, 0) = ssv;
        jet.third(0, 1, 1) = jet.third(1, 0, 1) = jet.third(1, 1, 0) = svv;
        jet.third(1, 1, 1) = dT(0, 3) + 6.0 * a / (v * v * v * v);
        return jet;
    };
    return make_analytic_surface(2, "(s,v)", {"s", "v"}, jet_fn, domain);
}

// ---- reduced van der Waals spinodal (Fig-1 phase boundary data) ----

struct ReducedBoundaryPoint {
    double v_r = 0.0, T_r = 0.0, p_r = 0.0;
    int branch = 0;  // 0: v_r < 1 (liquid side), 1: v_r > 1 (vapor side)
};

inline double reduced_spinodal_Tr(double v_r) {
    const double t = 3.0 * v_r - 1.0;
    return t * t / (4.0 * v_r * v_r * v_r);
}
inline double reduced_spinodal_pr(double v_r) { return (3.0 * v_r - 2.0) / (v_r * v_r * v_r); }

/// (T_r, p_r) on the reduced spinodal at reduced volume v_r > 1/3.
inline std::pair<double, double> reduced_spinodal_pT(double v_r) {
    if (!(v_r > 1.0 / 3.0))
        throw DomainError("reduced_spinodal_pT: requires v_r > 1/3");
    return {reduced_spinodal_Tr(v_r), reduced_spinodal_pr(v_r)};
}

/// All reduced-volume branches solving T_r(v_r) = T_r for a subcritical
/// temperature; empty above the critical point (T_r >= 1).
inline std::vector<ReducedBoundaryPoint> reduced_spinodal_branches(double T_r) {
    if (!(T_r > 0.0)) throw ValidationError("reduced_spinodal_branches: requires T_r > 0");
    std::vector<ReducedBoundaryPoint> out;
    if (T_r >= 1.0) return out;
    const double lo = 1.0 / 3.0 + 1e-9;
    const double hi = 4.5 / T_r;  // T_r(v) ~ 9/(4v) for large v, so the vapor root is inside
    auto f = [T_r](double v) { return reduced_spinodal_Tr(v) - T_r; };
    const ScanResult scan = scan_1d(f, lo, hi, 4001);
    for (const auto& root : scan.roots) {
        ReducedBoundaryPoint pt;
        pt.v_r = root.root;
        pt.T_r = reduced_spinodal_Tr(pt.v_r);
        pt.p_r = reduced_spinodal_pr(pt.v_r);
        pt.branch = pt.v_r < 1.0 ? 0 : 1;
        out.push_back(pt);
    }
    return out;
}

}  // namespace thermogeom
