#pragma once

/// Closed-system chemical reactions: mole bookkeeping over the extent of
/// reaction, the 3x3 Gibbs reaction metric, ideal-gas-mixture
/// specializations, isothermal analysis, Gibbs convexity, the W(xi) curve of
/// phase boundary with its critical extents, logistic integral curves, and
/// the bordered multi-reaction metric.

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thermogeom/errors.hpp"
#include "thermogeom/jet.hpp"
#include "thermogeom/metric.hpp"
#include "thermogeom/scan.hpp"
#include "thermogeom/standard_state.hpp"

namespace thermogeom {

/// Species, stoichiometric coefficients (negative for reactants), initial
/// moles, optional molar masses satisfying the stoichiometric equation
/// sum nu_i M_i = 0.
struct Stoichiometry {
    std::vector<std::string> species;
    std::vector<int> nu;
    std::vector<double> n0;
    std::optional<std::vector<double>> molar_mass;

    Stoichiometry(std::vector<std::string> species_, std::vector<int> nu_, std::vector<double> n0_,
                  std::optional<std::vector<double>> molar_mass_ = std::nullopt)
        : species(std::move(species_)), nu(std::move(nu_)), n0(std::move(n0_)),
          molar_mass(std::move(molar_mass_)) {
        const std::size_t r = species.size();
        if (nu.size() != r || n0.size() != r || (molar_mass && molar_mass->size() != r))
            throw ValidationError("Stoichiometry: field lengths disagree");
        bool has_reactant = false, has_product = false;
        for (int v : nu) {
            has_reactant |= v < 0;
            has_product |= v > 0;
        }
        if (!has_reactant || !has_product)
            throw ValidationError("Stoichiometry: needs at least one reactant and one product");
        for (double n : n0)
            if (n < 0.0) throw ValidationError("Stoichiometry: initial moles must be >= 0");
        if (molar_mass) {
            double balance = 0.0, scale = 0.0;
            for (std::size_t i = 0; i < r; ++i) {
                balance += nu[i] * (*molar_mass)[i];
                scale += std::abs(nu[i] * (*molar_mass)[i]);
            }
            if (std::abs(balance) > 1e-9 * scale)
                throw ValidationError("Stoichiometry: sum nu_i M_i != 0 (mass not conserved)");
        }
    }

    int size() const { return static_cast<int>(species.size()); }
    int nu_sum() const {
        int s = 0;
        for (int v : nu) s += v;
        return s;
    }
};

// worked reactions used throughout the test surface and the CLI
inline Stoichiometry synthesis_reaction() {
    return Stoichiometry({"H2", "O2", "H2O"}, {-2, -1, 2}, {2.0, 1.0, 0.0},
                         std::vector<double>{2.016, 31.998, 18.015});
}
inline Stoichiometry dissociation_reaction() {
    return Stoichiometry({"H2O", "H2", "O2"}, {-2, 2, 1}, {2.0, 0.0, 0.0},
                         std::vector<double>{18.015, 2.016, 31.998});
}
inline Stoichiometry displacement_reaction() {
    return Stoichiometry({"Zn", "CuSO4", "Cu", "ZnSO4"}, {-1, -1, 1, 1}, {1.0, 1.0, 0.0, 0.0});
}
inline Stoichiometry a_to_b_reaction() {
    return Stoichiometry({"A", "B"}, {-1, 1}, {1.0, 0.0});
}

inline Stoichiometry builtin_stoichiometry(const std::string& name) {
    if (name == "synthesis") return synthesis_reaction();
    if (name == "dissociation") return dissociation_reaction();
    if (name == "displacement") return displacement_reaction();
    if (name == "a-to-b") return a_to_b_reaction();
    throw ValidationError("unknown builtin reaction '" + name +
                          "' (expected synthesis|dissociation|displacement|a-to-b)");
}

struct FeasibilityInterval {
    double lo = 0.0, hi = 0.0;
};

/// [xi_min, xi_max] on which every N_i(xi) = N_i^0 + nu_i xi stays >= 0.
inline FeasibilityInterval feasibility_interval(const Stoichiometry& s) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < s.size(); ++i) {
        if (s.nu[i] > 0) lo = std::max(lo, -s.n0[i] / s.nu[i]);
        if (s.nu[i] < 0) hi = std::min(hi, s.n0[i] / -s.nu[i]);
    }
    return {lo, hi};
}

struct MolesResult {
    std::vector<double> N;
    FeasibilityInterval interval;
};

inline MolesResult moles_at(const Stoichiometry& s, double xi) {
    MolesResult out;
    out.interval = feasibility_interval(s);
    out.N.resize(s.size());
    std::vector<std::string> negative;
    for (int i = 0; i < s.size(); ++i) {
        out.N[i] = s.n0[i] + s.nu[i] * xi;
        if (out.N[i] < 0.0) negative.push_back(s.species[i]);
    }
    if (!negative.empty()) {
        std::ostringstream os;
        os << "moles_at: xi = " << xi << " outside feasibility interval [" << out.interval.lo
           << ", " << out.interval.hi << "]; negative moles for:";
        for (const auto& sp : negative) os << " " << sp;
        throw InfeasibleExtentError(os.str(), std::move(negative));
    }
    return out;
}

namespace detail {
inline std::vector<double> interior_moles(const Stoichiometry& s, double xi, const char* where) {
    const FeasibilityInterval iv = feasibility_interval(s);
    if (!(xi > iv.lo && xi < iv.hi)) {
        std::ostringstream os;
        os << where << ": xi = " << xi << " not strictly inside the feasibility interval ("
           << iv.lo << ", " << iv.hi << "); the mole-fraction logarithms diverge at the ends";
        throw DomainError(os.str());
    }
    return moles_at(s, xi).N;
}
}  // namespace detail

/// Curve of phase boundary W(xi) = (sum nu)^2 / sum N - sum nu_i^2 / N_i:
/// the interaction strength at which d2G/dxi2 changes sign.
inline double w_phase_boundary(const Stoichiometry& s, double xi) {
    const std::vector<double> N = detail::interior_moles(s, xi, "w_phase_boundary");
    double total = 0.0, sum_sq = 0.0;
    for (int i = 0; i < s.size(); ++i) {
        total += N[i];
        if (s.nu[i] != 0) sum_sq += static_cast<double>(s.nu[i]) * s.nu[i] / N[i];
    }
    const double nu_sum = s.nu_sum();
    return nu_sum * nu_sum / total - sum_sq;
}

/// dW/dxi = sum nu_i^3 / N_i^2 - (sum nu)^3 / (sum N)^2.
inline double dW_dxi(const Stoichiometry& s, double xi) {
    const std::vector<double> N = detail::interior_moles(s, xi, "dW_dxi");
    double total = 0.0, cubes = 0.0;
    for (int i = 0; i < s.size(); ++i) {
        total += N[i];
        if (s.nu[i] != 0)
            cubes += static_cast<double>(s.nu[i]) * s.nu[i] * s.nu[i] / (N[i] * N[i]);
    }
    const double nu_sum = s.nu_sum();
    return cubes - nu_sum * nu_sum * nu_sum / (total * total);
}

enum class Convexity { convex, concave, on_boundary };

/// G is convex in xi where the supplied W exceeds the boundary curve,
/// concave where it falls below.
inline Convexity classify_convexity(const Stoichiometry& s, double xi, double w_supplied) {
    const double boundary = w_phase_boundary(s, xi);
    if (w_supplied > boundary) return Convexity::convex;
    if (w_supplied < boundary) return Convexity::concave;
    return Convexity::on_boundary;
}

/// d2G/dxi2 = RT [ sum nu_i^2/N_i - (sum nu)^2/sum N + W(xi) ];  W = 0 for an
/// ideal mixture.
inline double d2G_dxi2(const Stoichiometry& s, double xi, double T,
                       const std::function<double(double)>& w_fn = nullptr,
                       double R = kGasConstant) {
    if (!(T > 0.0)) throw DomainError("d2G_dxi2: requires T > 0");
    const std::vector<double> N = detail::interior_moles(s, xi, "d2G_dxi2");
    double total = 0.0, sum_sq = 0.0;
    for (int i = 0; i < s.size(); ++i) {
        total += N[i];
        if (s.nu[i] != 0) sum_sq += static_cast<double>(s.nu[i]) * s.nu[i] / N[i];
    }
    const double nu_sum = s.nu_sum();
    const double w = w_fn ? w_fn(xi) : 0.0;
    return R * T * (sum_sq - nu_sum * nu_sum / total + w);
}

struct CriticalExtent {
    bool found = false;
    double xi_star = 0.0;
    double w_star = 0.0;
    ScanResult scan;  // of dW/dxi over the shrunken feasibility interval
};

/// Extremum of W(xi) (minimum of |W|), located by scan_1d on dW/dxi over the
/// feasibility interval shrunk by 1e-4 at each end.  A monotone W comes back
/// with found = false and the scan data attached.
inline CriticalExtent critical_extent(const Stoichiometry& s, int n_samples = 2001) {
    const FeasibilityInterval iv = feasibility_interval(s);
    constexpr double kMargin = 1e-4;
    const double lo = iv.lo + kMargin, hi = iv.hi - kMargin;
    if (!(lo < hi)) throw ValidationError("critical_extent: degenerate feasibility interval");
    CriticalExtent out;
    out.scan = scan_1d([&s](double xi) { return dW_dxi(s, xi); }, lo, hi, n_samples);
    for (const auto& root : out.scan.roots) {
        const double w = w_phase_boundary(s, root.root);
        if (!out.found || std::abs(w) < std::abs(out.w_star)) {
            out.found = true;
            out.xi_star = root.root;
            out.w_star = w;
        }
    }
    return out;
}

/// Per-species standard chemical potentials mu_i(T) plus the optional
/// interaction term W(xi) = d/dxi ln prod gamma_i^nu_i.  ln_q_gamma carries
/// ln prod gamma_i^nu_i itself when a model can supply it (W alone does not
/// fix the integration constant); both absent means an ideal mixture.
struct MixtureChemistry {
    std::vector<StandardPotential> mu_theta;
    double p_theta = 1.0;
    std::function<double(double)> w_fn;
    std::function<double(double)> ln_q_gamma;

    bool ideal() const { return !w_fn; }
};

/// Deterministic two-species test chemistry (negative a2 keeps C_p > 0).
inline MixtureChemistry default_ab_chemistry() {
    MixtureChemistry chem;
    chem.mu_theta = {StandardPotential{1.2, -0.4, -2.5}, StandardPotential{-0.8, 0.3, -3.0}};
    return chem;
}

/// Ideal A -> B mixture Gibbs potential
///   G = (1-xi) muA + xi muB + RT ln(p/p0) + RT[(1-xi)ln(1-xi) + xi ln xi]
/// with every derivative through third order in (T, p, xi).
inline Jet3 ideal_mixture_gibbs(double T, double p, double xi, const MixtureChemistry& chem,
                                double R = kGasConstant) {
    if (chem.mu_theta.size() != 2)
        throw ValidationError("ideal_mixture_gibbs: needs exactly two species (A, B)");
    if (!(T > 0.0) || !(p > 0.0)) throw DomainError("ideal_mixture_gibbs: requires T > 0, p > 0");
    if (!(xi > 0.0 && xi < 1.0))
        throw DomainError("ideal_mixture_gibbs: xi must lie strictly inside (0, 1); the mixing "
                          "logarithms diverge at the boundary");
    const StandardPotential &A = chem.mu_theta[0], &B = chem.mu_theta[1];
    const double mixing = (1.0 - xi) * std::log(1.0 - xi) + xi * std::log(xi);
    const double mix1 = std::log(xi / (1.0 - xi));
    const double mix2 = 1.0 / (xi * (1.0 - xi));
    const double mix3 = (2.0 * xi - 1.0) / (xi * xi * (1.0 - xi) * (1.0 - xi));

    Jet3 jet(3);
    jet.value = (1.0 - xi) * A.value(T, 0.0) + xi * B.value(T, 0.0) +
                R * T * std::log(p / chem.p_theta) + R * T * mixing;
    jet.grad[0] = (1.0 - xi) * A.dT(T, 0.0) + xi * B.dT(T, 0.0) +
                  R * std::log(p / chem.p_theta) + R * mixing;
    jet.grad[1] = R * T / p;
    jet.grad[2] = B.value(T, 0.0) - A.value(T, 0.0) + R * T * mix1;

    jet.hess(0, 0) = (1.0 - xi) * A.dTT(T, 0.0) + xi * B.dTT(T, 0.0);
    jet.hess(0, 1) = jet.hess(1, 0) = R / p;
    jet.hess(0, 2) = jet.hess(2, 0) = B.dT(T, 0.0) - A.dT(T, 0.0) + R * mix1;
    jet.hess(1, 1) = -R * T / (p * p);
    jet.hess(1, 2) = jet.hess(2, 1) = 0.0;
    jet.hess(2, 2) = R * T * mix2;

    auto set3 = [&jet](int i, int j, int k, double v) {
        jet.third(i, j, k) = v; jet.third(i, k, j) = v; jet.third(j, i, k) = v;
        jet.third(j, k, i) = v; jet.third(k, i, j) = v; jet.third(k, j, i) = v;
    };
    set3(0, 0, 0, (1.0 - xi) * A.dTTT(T, 0.0) + xi * B.dTTT(T, 0.0));
    set3(0, 0, 2, B.dTT(T, 0.0) - A.dTT(T, 0.0));
    set3(0, 1, 1, -R / (p * p));
    set3(0, 2, 2, R * mix2);
    set3(1, 1, 1, 2.0 * R * T / (p * p * p));
    set3(2, 2, 2, R * T * mix3);
    // T,T,p / T,p,xi / p,p,xi / p,xi,xi all vanish for this potential
    return jet;
}

inline PotentialSurface ideal_mixture_surface(MixtureChemistry chem, double R = kGasConstant) {
    auto domain = [](const std::vector<double>& x) {
        return x[0] > 0.0 && x[1] > 0.0 && x[2] > 0.0 && x[2] < 1.0;
    };
    auto jet_fn = [chem = std::move(chem), R](const std::vector<double>& x) {
        return ideal_mixture_gibbs(x[0], x[1], x[2], chem, R);
    };
    return make_analytic_surface(3, "(T,p,xi)", {"T", "p", "xi"}, jet_fn, domain);
}

/// Bulk and reaction terms entering the general Gibbs reaction metric.
struct ReactionMetricInputs {
    double C_p = 0.0;      // heat capacity at constant pressure
    double alphaV = 0.0;   // alpha * V
    double kTV = 0.0;      // k_T * V
    double dSr = 0.0;      // entropy of reaction
    double dVr = 0.0;      // volume of reaction
    double dA_dxi = 0.0;   // (dA/dxi)_{T,p} <= 0
    double affinity = 0.0;

    void validate() const {
        if (dA_dxi > 0.0)
            throw ValidationError("ReactionMetricInputs: (dA/dxi)_{T,p} must be <= 0");
    }
};

/// Inputs for the ideal A -> B mixture, read off the analytic Gibbs jet.
inline ReactionMetricInputs ideal_reaction_inputs(double T, double p, double xi,
                                                  const MixtureChemistry& chem,
                                                  double R = kGasConstant) {
    const Jet3 jet = ideal_mixture_gibbs(T, p, xi, chem, R);
    ReactionMetricInputs inp;
    inp.C_p = -T * jet.hess(0, 0);
    inp.alphaV = jet.hess(0, 1);
    inp.kTV = -jet.hess(1, 1);
    inp.dSr = -jet.hess(0, 2);
    inp.dVr = jet.hess(1, 2);
    inp.dA_dxi = -jet.hess(2, 2);
    inp.affinity = -jet.grad[2];
    return inp;
}

/// General 3x3 Gibbs reaction metric on (T, p, xi):
///   [ -C_p/T   alphaV   -dSr    ]
///   [ alphaV   -kTV     dVr     ]
///   [ -dSr     dVr      -dA/dxi ]
/// Third derivatives are not determined by bulk inputs; dg is zero here, so
/// curvature must come from an analytic surface instead.
inline MetricValue gibbs_reaction_metric(const ReactionMetricInputs& inp, double T, double p = 1.0,
                                         double xi = 0.5) {
    if (!(T > 0.0)) throw DomainError("gibbs_reaction_metric: requires T > 0");
    inp.validate();
    Matrix g(3, 3);
    g(0, 0) = -inp.C_p / T;
    g(0, 1) = g(1, 0) = inp.alphaV;
    g(0, 2) = g(2, 0) = -inp.dSr;
    g(1, 1) = -inp.kTV;
    g(1, 2) = g(2, 1) = inp.dVr;
    g(2, 2) = -inp.dA_dxi;
    return MetricValue(std::move(g), Tensor3(3), StatePoint("(T,p,xi)", {"T", "p", "xi"}, {T, p, xi}));
}

/// Determinant of the reaction metric: by elimination (authoritative), and by
/// the printed expansion
///   -C_v kTV/T (dA/dxi) + C_v/T dVr^2 + kTV [dSr - alphaV/kTV dVr]^2
/// with C_v = C_p - T alphaV^2 / kTV, for comparison only.
struct ReactionDetDiagnostic {
    double det_elimination = 0.0;
    double det_printed = 0.0;
    double rel_difference = 0.0;
};

inline ReactionDetDiagnostic reaction_det_diagnostic(const ReactionMetricInputs& inp, double T) {
    ReactionDetDiagnostic d;
    d.det_elimination = determinant(gibbs_reaction_metric(inp, T).g);
    const double C_v = inp.C_p - T * inp.alphaV * inp.alphaV / inp.kTV;
    const double sq = inp.dSr - (inp.alphaV / inp.kTV) * inp.dVr;
    d.det_printed = -C_v * inp.kTV / T * inp.dA_dxi + C_v / T * inp.dVr * inp.dVr +
                    inp.kTV * sq * sq;
    const double scale = std::max(std::abs(d.det_elimination), std::abs(d.det_printed));
    d.rel_difference = scale > 0.0 ? std::abs(d.det_elimination - d.det_printed) / scale : 0.0;
    return d;
}

/// Isothermal 2x2 reduction [[-kTV, dVr], [dVr, -dA/dxi]] on (p, xi).
inline MetricValue isothermal_metric(const ReactionMetricInputs& inp, double p = 1.0,
                                     double xi = 0.5) {
    inp.validate();
    Matrix g(2, 2);
    g(0, 0) = -inp.kTV;
    g(0, 1) = g(1, 0) = inp.dVr;
    g(1, 1) = -inp.dA_dxi;
    return MetricValue(std::move(g), Tensor3(2), StatePoint("(p,xi)", {"p", "xi"}, {p, xi}));
}

/// Ideal-mixture isothermal metric diag(-RT/p^2, RT/(xi(1-xi))) with its
/// exact third derivatives eta_11,1 = 2RT/p^3 and
/// eta_22,2 = RT(2xi-1)/(xi^2 (1-xi)^2).
inline MetricValue ideal_isothermal_metric(double T, double p, double xi,
                                           double R = kGasConstant) {
    if (!(T > 0.0) || !(p > 0.0)) throw DomainError("ideal_isothermal_metric: requires T, p > 0");
    if (!(xi > 0.0 && xi < 1.0))
        throw DomainError("ideal_isothermal_metric: xi must lie strictly inside (0, 1)");
    Matrix g(2, 2);
    g(0, 0) = -R * T / (p * p);
    g(1, 1) = R * T / (xi * (1.0 - xi));
    Tensor3 dg(2);
    dg(0, 0, 0) = 2.0 * R * T / (p * p * p);
    dg(1, 1, 1) = R * T * (2.0 * xi - 1.0) / (xi * xi * (1.0 - xi) * (1.0 - xi));
    return MetricValue(std::move(g), std::move(dg), StatePoint("(p,xi)", {"p", "xi"}, {p, xi}));
}

/// Quotients of reaction at an interior extent.
struct QuotientResult {
    double Q_c = 0.0;        // prod x_i^nu_i
    double Q_a = 0.0;        // Q_gamma * Q_c (Q_gamma = 1 without a model)
    double dlnQc_dxi = 0.0;  // sum nu^2/N - (sum nu)^2 / sum N
    std::optional<double> K_a;
};

inline QuotientResult quotient_of_reaction(const Stoichiometry& s, double xi,
                                           const MixtureChemistry* chem = nullptr,
                                           std::optional<double> dG_theta = std::nullopt,
                                           double T = 298.15, double R = kGasConstant) {
    const std::vector<double> N = detail::interior_moles(s, xi, "quotient_of_reaction");
    double total = 0.0;
    for (double n : N) total += n;
    QuotientResult out;
    out.Q_c = 1.0;
    double sum_sq = 0.0;
    for (int i = 0; i < s.size(); ++i) {
        if (s.nu[i] == 0) continue;
        out.Q_c *= std::pow(N[i] / total, s.nu[i]);
        sum_sq += static_cast<double>(s.nu[i]) * s.nu[i] / N[i];
    }
    const double nu_sum = s.nu_sum();
    out.dlnQc_dxi = sum_sq - nu_sum * nu_sum / total;
    out.Q_a = out.Q_c;
    if (chem && chem->ln_q_gamma) out.Q_a *= std::exp(chem->ln_q_gamma(xi));
    if (dG_theta) out.K_a = std::exp(-*dG_theta / (R * T));
    return out;
}

/// Integral curves of dxi/d(drG) = k xi (1 - xi) with k = 1/RT: the logistic
/// flow between the unstable equilibrium xi = 0 and the stable one xi = 1.
struct LogisticCurve {
    double k = 0.0;
    double xi0 = 0.0;

    double xi(double drG) const {
        if (xi0 == 0.0) return 0.0;  // fixed point
        if (xi0 == 1.0) return 1.0;  // fixed point
        return xi0 / (xi0 + (1.0 - xi0) * std::exp(-k * drG));
    }

    std::vector<std::pair<double, double>> sample(double lo, double hi, int n) const {
        if (!(lo < hi) || n < 2) throw ValidationError("LogisticCurve::sample: bad range");
        std::vector<std::pair<double, double>> out;
        out.reserve(n);
        const double step = (hi - lo) / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double g = (i == n - 1) ? hi : lo + i * step;
            out.emplace_back(g, xi(g));
        }
        return out;
    }
};

struct LogisticEquilibrium {
    double xi = 0.0;
    bool stable = false;
};

inline LogisticCurve logistic_curve(double T, double xi0, double R = kGasConstant) {
    if (!(T > 0.0)) throw DomainError("logistic_curve: requires T > 0");
    if (!(xi0 >= 0.0 && xi0 <= 1.0)) throw DomainError("logistic_curve: xi0 must be in [0, 1]");
    return LogisticCurve{1.0 / (R * T), xi0};
}

inline std::vector<LogisticEquilibrium> logistic_equilibria() {
    return {{0.0, false}, {1.0, true}};
}

/// Bulk terms plus per-reaction borders for l independent reactions; the
/// affinity Jacobian (dA_n/dxi_m) is a Hessian block of G and must be
/// symmetric.
struct MultiReactionInputs {
    double C_p = 0.0, alphaV = 0.0, kTV = 0.0;
    std::vector<double> dSr, dVr;  // length l
    Matrix dA_dxi;                 // l x l
};

inline MetricValue multireaction_metric(const MultiReactionInputs& inp, double T) {
    if (!(T > 0.0)) throw DomainError("multireaction_metric: requires T > 0");
    const int l = static_cast<int>(inp.dSr.size());
    if (l < 1 || static_cast<int>(inp.dVr.size()) != l || inp.dA_dxi.rows() != l ||
        inp.dA_dxi.cols() != l)
        throw ValidationError("multireaction_metric: inconsistent input sizes");
    const double scale = inp.dA_dxi.max_abs();
    for (int n = 0; n < l; ++n)
        for (int m = n + 1; m < l; ++m)
            if (std::abs(inp.dA_dxi(n, m) - inp.dA_dxi(m, n)) > 1e-9 * std::max(scale, 1e-300))
                throw ValidationError(
                    "multireaction_metric: affinity Jacobian is not symmetric; it must be a "
                    "Hessian block of G");

    const int dim = l + 2;
    Matrix g(dim, dim);
    g(0, 0) = -inp.C_p / T;
    g(0, 1) = g(1, 0) = inp.alphaV;
    g(1, 1) = -inp.kTV;
    for (int n = 0; n < l; ++n) {
        g(0, 2 + n) = g(2 + n, 0) = -inp.dSr[n];
        g(1, 2 + n) = g(2 + n, 1) = inp.dVr[n];
        for (int m = 0; m < l; ++m) g(2 + n, 2 + m) = -inp.dA_dxi(n, m);
    }
    std::vector<std::string> names = {"T", "p"};
    std::vector<double> coords = {T, 1.0};
    for (int n = 0; n < l; ++n) {
        names.push_back("xi" + std::to_string(n + 1));
        coords.push_back(0.0);
    }
    return MetricValue(std::move(g), Tensor3(dim),
                       StatePoint("(T,p,xi_1..xi_l)", std::move(names), std::move(coords)));
}

}  // namespace thermogeom
