#pragma once

/// Open multicomponent systems: partial molar quantities, the bordered
/// (r+2)x(r+2) open-system Gibbs metric, the everywhere-degenerate ideal
/// isothermal-isobaric metric, and non-ideal metrics split into ideal plus
/// deviation parts.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thermogeom/errors.hpp"
#include "thermogeom/linalg.hpp"
#include "thermogeom/metric.hpp"
#include "thermogeom/standard_state.hpp"

namespace thermogeom {

/// Composition-dependent activity corrections: ln gamma_i and its analytic
/// derivatives with respect to mole numbers, temperature and pressure.
/// Models derived from a free energy have a symmetric (d ln gamma_i / dN_k).
struct ActivityModel {
    std::function<std::vector<double>(double T, double p, const std::vector<double>& N)> ln_gamma;
    std::function<Matrix(double T, double p, const std::vector<double>& N)> dln_gamma_dN;
    std::function<std::vector<double>(double T, double p, const std::vector<double>& N)> dln_gamma_dT;
    std::function<std::vector<double>(double T, double p, const std::vector<double>& N)> dln_gamma_dp;

    std::vector<double> gamma(double T, double p, const std::vector<double>& N) const {
        std::vector<double> g = ln_gamma(T, p, N);
        for (double& x : g) x = std::exp(x);
        return g;
    }
};

/// One-parameter Margules binary model:
///   ln gamma_1 = (A_M/RT) x_2^2,  ln gamma_2 = (A_M/RT) x_1^2
/// (the excess free energy is A_M N x_1 x_2, so the mole-number derivative
/// matrix is symmetric by construction).
inline ActivityModel margules_binary(double A_M, double R = kGasConstant) {
    ActivityModel m;
    m.ln_gamma = [A_M, R](double T, double /*p*/, const std::vector<double>& N) {
        const double total = N[0] + N[1];
        const double x1 = N[0] / total, x2 = N[1] / total;
        const double B = A_M / (R * T);
        return std::vector<double>{B * x2 * x2, B * x1 * x1};
    };
    m.dln_gamma_dN = [A_M, R](double T, double /*p*/, const std::vector<double>& N) {
        const double total = N[0] + N[1];
        const double x1 = N[0] / total, x2 = N[1] / total;
        const double B = A_M / (R * T);
        Matrix d(2, 2);
        d(0, 0) = -2.0 * B * x2 * x2 / total;
        d(0, 1) = 2.0 * B * x1 * x2 / total;
        d(1, 0) = 2.0 * B * x1 * x2 / total;
        d(1, 1) = -2.0 * B * x1 * x1 / total;
        return d;
    };
    m.dln_gamma_dT = [A_M, R](double T, double /*p*/, const std::vector<double>& N) {
        const double total = N[0] + N[1];
        const double x1 = N[0] / total, x2 = N[1] / total;
        const double c = -A_M / (R * T * T);
        return std::vector<double>{c * x2 * x2, c * x1 * x1};
    };
    m.dln_gamma_dp = [](double, double, const std::vector<double>& N) {
        return std::vector<double>(N.size(), 0.0);
    };
    return m;
}

/// Wrap a gamma-only model with central-difference derivatives, for activity
/// models that cannot supply them analytically.
inline ActivityModel fd_activity_model(
    std::function<std::vector<double>(double, double, const std::vector<double>&)> ln_gamma,
    double base_step = 1e-6) {
    ActivityModel m;
    m.ln_gamma = ln_gamma;
    m.dln_gamma_dN = [ln_gamma, base_step](double T, double p, const std::vector<double>& N) {
        const int r = static_cast<int>(N.size());
        Matrix d(r, r);
        for (int k = 0; k < r; ++k) {
            const double h = base_step * std::max(1.0, std::abs(N[k]));
            std::vector<double> np = N, nm = N;
            np[k] += h;
            nm[k] -= h;
            const std::vector<double> gp = ln_gamma(T, p, np), gm = ln_gamma(T, p, nm);
            for (int i = 0; i < r; ++i) d(i, k) = (gp[i] - gm[i]) / (2.0 * h);
        }
        return d;
    };
    m.dln_gamma_dT = [ln_gamma, base_step](double T, double p, const std::vector<double>& N) {
        const double h = base_step * std::max(1.0, std::abs(T));
        const std::vector<double> gp = ln_gamma(T + h, p, N), gm = ln_gamma(T - h, p, N);
        std::vector<double> d(N.size());
        for (std::size_t i = 0; i < N.size(); ++i) d[i] = (gp[i] - gm[i]) / (2.0 * h);
        return d;
    };
    m.dln_gamma_dp = [ln_gamma, base_step](double T, double p, const std::vector<double>& N) {
        const double h = base_step * std::max(1.0, std::abs(p));
        const std::vector<double> gp = ln_gamma(T, p + h, N), gm = ln_gamma(T, p - h, N);
        std::vector<double> d(N.size());
        for (std::size_t i = 0; i < N.size(); ++i) d[i] = (gp[i] - gm[i]) / (2.0 * h);
        return d;
    };
    return m;
}

/// An open r-component system: moles, standard-state potentials mu*_i(T,p),
/// optional activity model (absent -> ideal solution).
struct SolutionSpec {
    std::vector<double> N;
    std::vector<StandardPotential> mu_star;
    std::optional<ActivityModel> activity;
    double R = kGasConstant;

    SolutionSpec(std::vector<double> N_, std::vector<StandardPotential> mu_star_,
                 std::optional<ActivityModel> activity_ = std::nullopt, double R_ = kGasConstant)
        : N(std::move(N_)), mu_star(std::move(mu_star_)), activity(std::move(activity_)), R(R_) {
        if (N.empty() || mu_star.size() != N.size())
            throw ValidationError("SolutionSpec: needs one mu* per species");
        for (double n : N)
            if (!(n > 0.0)) throw ValidationError("SolutionSpec: all mole numbers must be > 0");
        if (!(R > 0.0)) throw ValidationError("SolutionSpec: R must be > 0");
    }

    int size() const { return static_cast<int>(N.size()); }
    double total() const {
        double t = 0.0;
        for (double n : N) t += n;
        return t;
    }
};

struct PartialMolarSet {
    std::vector<double> S_bar;  // partial molar entropies
    std::vector<double> V_bar;  // partial molar volumes
    Matrix mu_bar;              // (d mu_i / dN_k)_{T,p}
};

struct BulkResponse {
    double C_p = 0.0, alphaV = 0.0, kTV = 0.0;
};

/// Ideal:  -S_i = dmu*_i/dT + R ln x_i,  V_i = dmu*_i/dp,
///         mu_ii = RT(1/N_i - 1/N),  mu_ik = -RT/N.
/// The activity model adds R[ln g_i + T dln g_i/dT], RT dln g_i/dp and
/// RT dln g_i/dN_k respectively.
inline PartialMolarSet partial_molars(const SolutionSpec& spec, double T, double p) {
    if (!(T > 0.0)) throw DomainError("partial_molars: requires T > 0");
    const int r = spec.size();
    const double total = spec.total();
    const double R = spec.R;
    PartialMolarSet out;
    out.S_bar.resize(r);
    out.V_bar.resize(r);
    out.mu_bar = Matrix(r, r);

    for (int i = 0; i < r; ++i) {
        const double x_i = spec.N[i] / total;
        out.S_bar[i] = -(spec.mu_star[i].dT(T, p) + R * std::log(x_i));
        out.V_bar[i] = spec.mu_star[i].dp(T, p);
        for (int k = 0; k < r; ++k)
            out.mu_bar(i, k) = (i == k) ? R * T * (1.0 / spec.N[i] - 1.0 / total)
                                        : -R * T / total;
    }
    if (spec.activity) {
        const auto& act = *spec.activity;
        const std::vector<double> lng = act.ln_gamma(T, p, spec.N);
        const std::vector<double> dT = act.dln_gamma_dT(T, p, spec.N);
        const std::vector<double> dp = act.dln_gamma_dp(T, p, spec.N);
        const Matrix dN = act.dln_gamma_dN(T, p, spec.N);
        for (int i = 0; i < r; ++i) {
            out.S_bar[i] -= R * (lng[i] + T * dT[i]);
            out.V_bar[i] += R * T * dp[i];
            for (int k = 0; k < r; ++k) out.mu_bar(i, k) += R * T * dN(i, k);
        }
        // Hessian consistency of the activity model
        const double scale = std::max(out.mu_bar.max_abs(), 1e-300);
        for (int i = 0; i < r; ++i)
            for (int k = i + 1; k < r; ++k)
                if (std::abs(out.mu_bar(i, k) - out.mu_bar(k, i)) > 1e-9 * scale)
                    throw ValidationError(
                        "partial_molars: activity model yields asymmetric d mu_i/dN_k; "
                        "ln gamma must derive from a free energy");
        out.mu_bar.symmetrize();
    }
    return out;
}

/// Bordered (r+2)x(r+2) open-system metric on (T, p, N_1..N_r):
///   [ -C_p/T   alphaV  -S_1 ... ]
///   [ alphaV   -kTV     V_1 ... ]
///   [ -S_i      V_i    mu_ik    ]
/// dg is zero: bulk inputs carry no third derivatives.
inline MetricValue open_system_metric(const SolutionSpec& spec, const BulkResponse& bulk,
                                      double T, double p) {
    const int r = spec.size();
    const PartialMolarSet pm = partial_molars(spec, T, p);
    const int dim = r + 2;
    Matrix g(dim, dim);
    g(0, 0) = -bulk.C_p / T;
    g(0, 1) = g(1, 0) = bulk.alphaV;
    g(1, 1) = -bulk.kTV;
    for (int i = 0; i < r; ++i) {
        g(0, 2 + i) = g(2 + i, 0) = -pm.S_bar[i];
        g(1, 2 + i) = g(2 + i, 1) = pm.V_bar[i];
        for (int k = 0; k < r; ++k) g(2 + i, 2 + k) = pm.mu_bar(i, k);
    }
    std::vector<std::string> names = {"T", "p"};
    std::vector<double> coords = {T, p};
    for (int i = 0; i < r; ++i) {
        names.push_back("N" + std::to_string(i + 1));
        coords.push_back(spec.N[i]);
    }
    return MetricValue(std::move(g), Tensor3(dim),
                       StatePoint("(T,p,N_1..N_r)", std::move(names), std::move(coords)));
}

/// Isothermal-isobaric r x r metric: just the mu_ik block.  Ideal solutions
/// are degenerate everywhere here (the ideal block annihilates N).
inline MetricValue isothermal_isobaric_metric(const SolutionSpec& spec, double T, double p) {
    const int r = spec.size();
    PartialMolarSet pm = partial_molars(spec, T, p);
    std::vector<std::string> names;
    std::vector<double> coords;
    for (int i = 0; i < r; ++i) {
        names.push_back("N" + std::to_string(i + 1));
        coords.push_back(spec.N[i]);
    }
    return MetricValue(std::move(pm.mu_bar), Tensor3(r),
                       StatePoint("(N_1..N_r)", std::move(names), std::move(coords)));
}

/// eta = eta_ideal + eta_deviation: the ideal block RT(delta_ik/N_i - 1/N)
/// plus RT (d ln gamma_i / dN_k).  The deviation is identically zero without
/// an activity model.
struct MetricDecomposition {
    Matrix ideal;
    Matrix deviation;
};

inline MetricDecomposition deviation_decomposition(const SolutionSpec& spec, double T, double p) {
    if (!(T > 0.0)) throw DomainError("deviation_decomposition: requires T > 0");
    const int r = spec.size();
    const double total = spec.total();
    MetricDecomposition out{Matrix(r, r), Matrix(r, r)};
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            out.ideal(i, k) = (i == k) ? spec.R * T * (1.0 / spec.N[i] - 1.0 / total)
                                       : -spec.R * T / total;
    if (spec.activity) {
        const Matrix dN = spec.activity->dln_gamma_dN(T, p, spec.N);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) out.deviation(i, k) = spec.R * T * dN(i, k);
        out.deviation.symmetrize();
    }
    return out;
}

/// Total Gibbs energy G = sum_i N_i [mu*_i + RT ln(gamma_i x_i)]; the
/// explicit function the finite-difference oracle differentiates.
inline double total_gibbs(const SolutionSpec& spec, double T, double p) {
    if (!(T > 0.0)) throw DomainError("total_gibbs: requires T > 0");
    const double total = spec.total();
    std::vector<double> lng(spec.size(), 0.0);
    if (spec.activity) lng = spec.activity->ln_gamma(T, p, spec.N);
    double g = 0.0;
    for (int i = 0; i < spec.size(); ++i) {
        const double x_i = spec.N[i] / total;
        g += spec.N[i] * (spec.mu_star[i].value(T, p) + spec.R * T * (lng[i] + std::log(x_i)));
    }
    return g;
}

/// The same total G as a function of (T, p, N_1..N_r) for fd_jet3.
inline std::function<double(const std::vector<double>&)> total_gibbs_fn(SolutionSpec spec) {
    return [spec = std::move(spec)](const std::vector<double>& x) {
        std::vector<double> N(x.begin() + 2, x.end());
        SolutionSpec at(std::move(N), spec.mu_star, spec.activity, spec.R);
        return total_gibbs(at, x[0], x[1]);
    };
}

}  // namespace thermogeom
