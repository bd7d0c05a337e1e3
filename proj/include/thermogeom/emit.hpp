#pragma once

/// CSV data products behind the CLI subcommands.  Everything here returns
/// the finished byte-deterministic CSV string; the CLI only parses flags and
/// writes files, so the verify suite can exercise the exact same emissions.

#include <random>
#include <string>
#include <vector>

#include "thermogeom/csv.hpp"
#include "thermogeom/gas.hpp"
#include "thermogeom/metric.hpp"
#include "thermogeom/reaction.hpp"
#include "thermogeom/solution.hpp"

namespace thermogeom {

struct ScanRange {
    double lo = 0.0, hi = 0.0;
    int samples = 0;

    void validate() const {
        if (!(lo < hi)) throw ValidationError("scan range: requires lo < hi");
        if (samples < 2) throw ValidationError("scan range: requires samples >= 2");
    }
    double at(int i) const {
        return (i == samples - 1) ? hi : lo + i * (hi - lo) / (samples - 1);
    }
};

inline std::string signature_label(const SignatureInfo& sig) {
    if (sig.kind == Signature::indefinite)
        return "indefinite(" + std::to_string(sig.n_positive) + "," +
               std::to_string(sig.n_negative) + ")";
    return to_string(sig.kind);
}

// ---- gas ----

inline std::string emit_gas_metric_csv(const GasModel& model, double T, ScanRange vr) {
    vr.validate();
    CsvWriter csv({"T", "v", "g_ss", "g_sv", "g_vv", "det", "signature"});
    for (int i = 0; i < vr.samples; ++i) {
        const double v = vr.at(i);
        const MetricValue m = weinhold_metric(model, {T, v});
        const auto [det, sig] = det_and_signature(m);
        csv.cell(T).cell(v).cell(m.g(0, 0)).cell(m.g(0, 1)).cell(m.g(1, 1)).cell(det)
            .cell(signature_label(sig));
        csv.end_row();
    }
    return csv.str();
}

inline std::string emit_gas_curvature_csv(const GasModel& model, double T, ScanRange vr) {
    vr.validate();
    CsvWriter csv({"T", "v", "curvature"});
    for (int i = 0; i < vr.samples; ++i) {
        const double v = vr.at(i);
        csv.cell(T).cell(v).cell(curvature_closed_form(model, {T, v}));
        csv.end_row();
    }
    return csv.str();
}

inline std::string emit_gas_spinodal_csv(const GasModel& model, ScanRange vr) {
    CsvWriter csv({"v", "p_spin", "T_spin", "det_residual"});
    const SpinodalCurves sp = spinodal(model);
    if (!sp.exists) return csv.str();  // no curve of degeneracy: header only
    vr.validate();
    for (int i = 0; i < vr.samples; ++i) {
        const double v = vr.at(i);
        const double T = sp.temperature(v);
        const double residual = determinant(weinhold_metric(model, {T, v}).g);
        csv.cell(v).cell(sp.pressure(v)).cell(T).cell(residual);
        csv.end_row();
    }
    return csv.str();
}

inline std::string emit_gas_critical_csv(const GasModel& model) {
    const CriticalPoint cp = critical_point(model);
    CsvWriter csv({"p_c", "T_c", "v_c"});
    csv.cell(cp.p).cell(cp.T).cell(cp.v);
    csv.end_row();
    return csv.str();
}

/// Full Fig-1 boundary data over a reduced-volume range.
inline std::string emit_pt_boundary_csv(ScanRange vr) {
    vr.validate();
    if (!(vr.lo > 1.0 / 3.0))
        throw ValidationError("pt-boundary: reduced-volume range must stay above 1/3");
    CsvWriter csv({"v_r", "T_r", "p_r", "branch_id"});
    for (int i = 0; i < vr.samples; ++i) {
        const double v_r = vr.at(i);
        const auto [T_r, p_r] = reduced_spinodal_pT(v_r);
        csv.cell(v_r).cell(T_r).cell(p_r).cell(v_r < 1.0 ? 0 : 1);
        csv.end_row();
    }
    return csv.str();
}

/// Branch roots at a fixed subcritical reduced temperature.
inline std::string emit_pt_boundary_branches_csv(double T_r) {
    CsvWriter csv({"v_r", "T_r", "p_r", "branch_id"});
    for (const ReducedBoundaryPoint& pt : reduced_spinodal_branches(T_r)) {
        csv.cell(pt.v_r).cell(pt.T_r).cell(pt.p_r).cell(pt.branch);
        csv.end_row();
    }
    return csv.str();
}

// ---- reaction ----

inline ScanRange default_extent_range(const Stoichiometry& s, int samples) {
    const FeasibilityInterval iv = feasibility_interval(s);
    return {iv.lo + 1e-3, iv.hi - 1e-3, samples};
}

inline std::string emit_w_curve_csv(const Stoichiometry& s, ScanRange xir) {
    xir.validate();
    CsvWriter csv({"xi", "W", "dW_dxi"});
    for (int i = 0; i < xir.samples; ++i) {
        const double xi = xir.at(i);
        csv.cell(xi).cell(w_phase_boundary(s, xi)).cell(dW_dxi(s, xi));
        csv.end_row();
    }
    return csv.str();
}

inline std::string emit_critical_extent_csv(const Stoichiometry& s) {
    const CriticalExtent ce = critical_extent(s);
    if (!ce.found) throw DomainError("critical-extent: W(xi) is monotone on the interval");
    CsvWriter csv({"xi_star", "W_star"});
    csv.cell(ce.xi_star).cell(ce.w_star);
    csv.end_row();
    return csv.str();
}

/// Fig-2 data: the ideal A -> B Gibbs energy along the extent of reaction.
inline std::string emit_gibbs_scan_csv(const MixtureChemistry& chem, double T, double p,
                                       ScanRange xir, double R = kGasConstant) {
    xir.validate();
    CsvWriter csv({"xi", "G", "dG_dxi", "d2G_dxi2"});
    for (int i = 0; i < xir.samples; ++i) {
        const double xi = xir.at(i);
        const Jet3 jet = ideal_mixture_gibbs(T, p, xi, chem, R);
        csv.cell(xi).cell(jet.value).cell(jet.grad[2]).cell(jet.hess(2, 2));
        csv.end_row();
    }
    return csv.str();
}

/// Fig-4 data: quotient of reaction along the extent.
inline std::string emit_quotient_csv(const Stoichiometry& s, ScanRange xir) {
    xir.validate();
    CsvWriter csv({"xi", "Q_c", "Q_a", "dlnQc_dxi"});
    for (int i = 0; i < xir.samples; ++i) {
        const double xi = xir.at(i);
        const QuotientResult q = quotient_of_reaction(s, xi);
        csv.cell(xi).cell(q.Q_c).cell(q.Q_a).cell(q.dlnQc_dxi);
        csv.end_row();
    }
    return csv.str();
}

inline std::string emit_reaction_metric_csv(const MixtureChemistry& chem, double T, double p,
                                            ScanRange xir, double R = kGasConstant) {
    xir.validate();
    CsvWriter csv({"xi", "g_TT", "g_Tp", "g_Txi", "g_pp", "g_pxi", "g_xixi", "det"});
    for (int i = 0; i < xir.samples; ++i) {
        const double xi = xir.at(i);
        const MetricValue m =
            gibbs_reaction_metric(ideal_reaction_inputs(T, p, xi, chem, R), T, p, xi);
        csv.cell(xi).cell(m.g(0, 0)).cell(m.g(0, 1)).cell(m.g(0, 2)).cell(m.g(1, 1))
            .cell(m.g(1, 2)).cell(m.g(2, 2)).cell(determinant(m.g));
        csv.end_row();
    }
    return csv.str();
}

// ---- solution ----

/// Deterministic per-species mu*(T,p) family for CLI runs.
inline std::vector<StandardPotential> default_mu_star(int r) {
    std::vector<StandardPotential> mu;
    for (int i = 0; i < r; ++i) {
        StandardPotential m;
        m.a0 = 0.8 - 0.3 * i;
        m.a1 = 0.2 + 0.1 * i;
        m.a2 = -2.0 - 0.5 * i;
        m.b0 = 0.5 + 0.2 * i;
        m.b1 = 0.05 * (i + 1);
        m.b2 = 0.1 + 0.05 * i;
        mu.push_back(m);
    }
    return mu;
}

inline void append_solution_metric_row(CsvWriter& csv, int sample, const SolutionSpec& spec,
                                       double T, double p) {
    const MetricValue m = isothermal_isobaric_metric(spec, T, p);
    const auto [det, sig] = det_and_signature(m);
    csv.cell(sample);
    for (double n : spec.N) csv.cell(n);
    for (int i = 0; i < m.dim(); ++i)
        for (int k = 0; k < m.dim(); ++k) csv.cell(m.g(i, k));
    csv.cell(det).cell(signature_label(sig));
    csv.end_row();
}

inline std::vector<std::string> solution_metric_header(int r) {
    std::vector<std::string> header = {"sample"};
    for (int i = 1; i <= r; ++i) header.push_back("N" + std::to_string(i));
    for (int i = 1; i <= r; ++i)
        for (int k = 1; k <= r; ++k)
            header.push_back("eta_" + std::to_string(i) + std::to_string(k));
    header.push_back("det");
    header.push_back("signature");
    return header;
}

/// One row for an explicit mole vector.
inline std::string emit_solution_metric_csv(const SolutionSpec& spec, double T, double p) {
    CsvWriter csv(solution_metric_header(spec.size()));
    append_solution_metric_row(csv, 0, spec, T, p);
    return csv.str();
}

/// `count` rows of seeded random ideal specs with r species.
inline std::string emit_solution_metric_random_csv(int r, int count, unsigned long long seed,
                                                   double T, double p, double R = kGasConstant) {
    if (r < 1 || count < 1)
        throw ValidationError("solution metric: needs r >= 1 and count >= 1");
    CsvWriter csv(solution_metric_header(r));
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> moles(0.2, 5.0);
    for (int sample = 0; sample < count; ++sample) {
        std::vector<double> N(r);
        for (double& n : N) n = moles(gen);
        append_solution_metric_row(csv, sample, SolutionSpec(N, default_mu_star(r), std::nullopt, R),
                                   T, p);
    }
    return csv.str();
}

/// Ideal and deviation blocks side by side, entry per row.
inline std::string emit_solution_decompose_csv(const SolutionSpec& spec, double T, double p) {
    const MetricDecomposition d = deviation_decomposition(spec, T, p);
    const MetricValue total = isothermal_isobaric_metric(spec, T, p);
    CsvWriter csv({"i", "k", "ideal", "deviation", "total"});
    for (int i = 0; i < spec.size(); ++i)
        for (int k = 0; k < spec.size(); ++k) {
            csv.cell(i + 1).cell(k + 1).cell(d.ideal(i, k)).cell(d.deviation(i, k))
                .cell(total.g(i, k));
            csv.end_row();
        }
    return csv.str();
}

}  // namespace thermogeom
