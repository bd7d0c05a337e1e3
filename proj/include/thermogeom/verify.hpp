#pragma once

/// The acceptance suite: every library-level guarantee, run end to end with
/// pinned tolerances and seeds.  Returns one record per check; the CLI
/// serializes them to JSON and the acceptance binary prints one line each.

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "thermogeom/emit.hpp"
#include "thermogeom/gas.hpp"
#include "thermogeom/metric.hpp"
#include "thermogeom/numdiff.hpp"
#include "thermogeom/reaction.hpp"
#include "thermogeom/solution.hpp"

namespace thermogeom {

struct CriterionResult {
    std::string id;
    std::string section;  // gas | reaction | solution | geometry
    std::string description;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool asserted = true;  // false: reported for visibility, never gates
    std::string note;
};

namespace verify_detail {

inline double rel(double a, double b, double floor = 1e-300) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

class Suite {
  public:
    explicit Suite(std::string only) : only_(std::move(only)) {}

    bool wants(const std::string& section) const { return only_.empty() || only_ == section; }

    /// actual is an error magnitude; passes when it stays within tolerance.
    void check_err(const std::string& id, const std::string& section, const std::string& desc,
                   double err, double tol) {
        results_.push_back({id, section, desc, 0.0, err, tol, err <= tol, true, {}});
    }
    /// actual is a violation count; passes when zero.
    void check_count(const std::string& id, const std::string& section, const std::string& desc,
                     int count) {
        results_.push_back(
            {id, section, desc, 0.0, static_cast<double>(count), 0.0, count == 0, true, {}});
    }
    /// passes when the value exceeds the threshold (divergence checks).
    void check_exceeds(const std::string& id, const std::string& section, const std::string& desc,
                       double value, double threshold) {
        results_.push_back({id, section, desc, threshold, value, 0.0, value > threshold, true, {}});
    }
    /// reported-only diagnostic; never gates the suite.
    void report(const std::string& id, const std::string& section, const std::string& desc,
                double expected, double actual, std::string note) {
        results_.push_back(
            {id, section, desc, expected, actual, 0.0, true, false, std::move(note)});
    }

    std::vector<CriterionResult> take() { return std::move(results_); }

  private:
    std::string only_;
    std::vector<CriterionResult> results_;
};

// ---- section: gas ----

inline void run_gas(Suite& suite) {
    const double R = 1.0, cv = 1.5;
    const GasModel ideal = GasModel::ideal(R, cv);

    {  // C01: ideal-gas flatness on a 10x10 (s,v) grid
        double worst_analytic = 0.0, worst_fd = 0.0;
        const PotentialSurface fd_surface =
            make_fd_surface(2, "(s,v)", {"s", "v"}, energy_value_fn(ideal),
                            [](const std::vector<double>& x) { return x[1] > 0.0; }, 5e-3);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const double s = -0.45 + 0.9 * i / 9.0;
                const double v = 0.7 + 1.1 * j / 9.0;
                const double T = ideal.temperature_sv(s, v);
                const MetricValue analytic = weinhold_metric(ideal, {T, v});
                worst_analytic = std::max(worst_analytic, std::abs(curvature(analytic).scalar));
                const MetricValue fd = hessian_metric(fd_surface, fd_surface.point({s, v}));
                worst_fd = std::max(worst_fd, std::abs(curvature(fd).scalar));
            }
        suite.check_err("C01.analytic", "gas", "ideal-gas scalar curvature vanishes (analytic jets)",
                        worst_analytic, 1e-8);
        suite.check_err("C01.fd", "gas",
                        "ideal-gas scalar curvature vanishes (finite-difference pipeline)",
                        worst_fd, 1e-5);
    }

    {  // C02: ideal determinant and signature on the same grid
        double worst = 0.0;
        int not_positive_definite = 0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const double s = -0.45 + 0.9 * i / 9.0;
                const double v = 0.7 + 1.1 * j / 9.0;
                const double T = ideal.temperature_sv(s, v);
                const MetricValue m = weinhold_metric(ideal, {T, v});
                const auto [det, sig] = det_and_signature(m);
                worst = std::max(worst, rel(det, R * T * T / (cv * v * v)));
                if (sig.kind != Signature::positive_definite) ++not_positive_definite;
            }
        suite.check_err("C02.det", "gas", "ideal det equals RT^2/(c_v v^2)", worst, 1e-10);
        suite.check_count("C02.signature", "gas", "ideal Weinhold metric is positive definite",
                          not_positive_definite);
    }

    {  // C03: vdW critical point, closed form and numeric extrema
        const GasModel vdw = GasModel::van_der_waals(27.0, 1.0, 8.0 / 3.0, 4.0);
        const CriticalPoint cp = critical_point(vdw);
        const double closed =
            std::max({rel(cp.p, 1.0), rel(cp.T, 3.0), rel(cp.v, 3.0)});
        suite.check_err("C03.closed", "gas", "vdW critical point is (1, 3, 3) at a=27, b=1, R=8/3",
                        closed, 1e-12);
        const SpinodalCurves sp = spinodal(vdw);
        const ScanResult scan_p = scan_1d(sp.pressure, 1.2, 8.0, 401);
        const ScanResult scan_T = scan_1d(sp.temperature, 1.2, 8.0, 401);
        double err = 1.0;
        if (!scan_p.extrema.empty() && !scan_T.extrema.empty())
            err = std::max({rel(scan_p.extrema[0].location, cp.v),
                            rel(scan_p.extrema[0].value, cp.p),
                            rel(scan_T.extrema[0].location, cp.v),
                            rel(scan_T.extrema[0].value, cp.T)});
        suite.check_err("C03.scan", "gas", "numeric extrema of p(v) and T(v) match the closed form",
                        err, 1e-6);
    }

    const GasModel vdw = GasModel::van_der_waals(1.0, 0.1, R, cv);
    {  // C04: vdW closed-form curvature vs the full (s,v)-metric pipeline
        std::mt19937_64 gen(20240604);
        std::uniform_real_distribution<double> Td(0.8, 3.0), vd(0.4, 2.1);
        double worst = 0.0;
        int states = 0;
        while (states < 20) {
            const double T = Td(gen), v = vd(gen);
            const MetricValue m = weinhold_metric(vdw, {T, v});
            const double scale = degeneracy_scale(m.g);
            if (std::abs(determinant(m.g)) < 1e-4 * scale * scale) continue;
            worst = std::max(worst, rel(curvature(m).scalar, curvature_closed_form(vdw, {T, v})));
            ++states;
        }
        suite.check_err("C04.oracle", "gas",
                        "vdW closed-form curvature matches the metric pipeline", worst, 1e-4);

        const SpinodalCurves sp = spinodal(vdw);
        double min_R = std::numeric_limits<double>::infinity();
        int out_of_band = 0;
        for (double v : {0.7, 1.0, 1.4}) {
            const double T = sp.temperature(v) * (1.0 + 1e-7);
            const MetricValue m = weinhold_metric(vdw, {T, v});
            const double scale = degeneracy_scale(m.g);
            const double ratio = std::abs(determinant(m.g)) / (scale * scale);
            if (!(ratio < 1e-6 && ratio >= 1e-10)) ++out_of_band;
            const CurvatureReport rep = curvature(m);
            if (!rep.near_degenerate) ++out_of_band;
            min_R = std::min({min_R, std::abs(rep.scalar),
                              std::abs(curvature_closed_form(vdw, {T, v}))});
        }
        suite.check_count("C04.band", "gas",
                          "near-spinodal states sit in the flagged near-degenerate band",
                          out_of_band);
        suite.check_exceeds("C04.divergence", "gas",
                            "curvature exceeds 1e6 inside the near-degenerate band", min_R, 1e6);
    }

    {  // C05: vdW -> ideal limit at a = b = 0
        const GasModel limit = GasModel::van_der_waals(0.0, 0.0, R, cv);
        double worst = 0.0;
        for (double T : {0.9, 1.4, 2.2})
            for (double v : {0.7, 1.0, 1.6}) {
                const MetricValue a = weinhold_metric(limit, {T, v});
                const MetricValue b = weinhold_metric(ideal, {T, v});
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) worst = std::max(worst, rel(a.g(i, j), b.g(i, j)));
            }
        suite.check_err("C05.limit", "gas", "vdW metric with a=b=0 recovers the ideal entries",
                        worst, 1e-12);
    }

    {  // C06: Berthelot critical point, FD-pipeline consistency, printed form report
        const GasModel example = GasModel::berthelot(1.0, 1.0, 1.0, cv);
        const CriticalPoint cpe = critical_point(example);
        const double closed = std::max({rel(cpe.v, 3.0), rel(cpe.p, std::sqrt(1.0 / 216.0)),
                                        rel(cpe.T, std::sqrt(8.0 / 27.0))});
        suite.check_err("C06.closed", "gas",
                        "Berthelot critical point (3b, sqrt(aR/216b^3), sqrt(8a/27Rb))", closed,
                        1e-12);

        const GasModel generic = GasModel::berthelot(2.0, 0.15, 1.0, cv);
        const CriticalPoint cp = critical_point(generic);
        const SpinodalCurves sp = spinodal(generic);
        const ScanResult scan_p = scan_1d(sp.pressure, 1.2 * 0.15, 8.0 * 0.15, 401);
        const ScanResult scan_T = scan_1d(sp.temperature, 1.2 * 0.15, 8.0 * 0.15, 401);
        double err = 1.0;
        if (!scan_p.extrema.empty() && !scan_T.extrema.empty())
            err = std::max({rel(scan_p.extrema[0].location, cp.v),
                            rel(scan_p.extrema[0].value, cp.p),
                            rel(scan_T.extrema[0].location, cp.v),
                            rel(scan_T.extrema[0].value, cp.T)});
        suite.check_err("C06.scan", "gas",
                        "Berthelot numeric spinodal extremum matches the closed form", err, 1e-6);

        const GasModel ber = GasModel::berthelot(1.0, 0.1, 1.0, cv);
        const double T0 = 1.5, v0 = 1.0;
        const std::vector<double> x = {ber.entropy(T0, v0), v0};
        const auto u = energy_value_fn(ber);
        auto pipeline_R = [&](double step) {
            const Jet3 jet = fd_jet3(u, x, step);
            MetricValue m(jet.hess, jet.third, StatePoint("(s,v)", {"s", "v"}, x));
            return curvature(m).scalar;
        };
        const double r_h = pipeline_R(5e-3);
        const double r_half = pipeline_R(2.5e-3);
        suite.check_err("C06.step_halving", "gas",
                        "Berthelot FD curvature pipeline is stable under step halving",
                        rel(r_h, r_half), 1e-4);

        const double printed = curvature_closed_form(ber, {T0, v0});
        const double paper_route = curvature(weinhold_metric(ber, {T0, v0})).scalar;
        std::ostringstream note;
        note << "printed form = " << printed << ", FD pipeline (consistent u) = " << r_half
             << ", constant-c_v metric route = " << paper_route
             << "; rel diff to printed: " << rel(r_half, printed) << " / "
             << rel(paper_route, printed)
             << " (printed polynomials mix inconsistent dimensions; reported, not asserted)";
        suite.report("C06.printed", "gas",
                     "Berthelot printed curvature vs numeric pipelines (diagnostic)", printed,
                     r_half, note.str());
    }

    {  // C14: response-function identity for all models
        std::mt19937_64 gen(20240614);
        std::uniform_real_distribution<double> Td(0.8, 3.0), vd(0.3, 2.0);
        double worst = 0.0;
        for (const GasModel& m :
             {ideal, vdw, GasModel::berthelot(1.0, 0.1, R, cv)}) {
            int states = 0;
            while (states < 50) {
                const double T = Td(gen), v = m.b() + vd(gen);
                if (!(m.dp_dv(T, v) < 0.0)) continue;
                const ResponseFunctions r = response_functions(m, {T, v});
                worst = std::max(worst,
                                 rel(r.c_p - m.c_v(), v * T * r.alpha * r.alpha / r.k_T));
                ++states;
            }
        }
        suite.check_err("C14.identity", "gas", "c_p - c_v = vT alpha^2 / k_T at random stable states",
                        worst, 1e-8);
    }

    {  // C15: reduced p-T boundary
        const auto [Tr1, pr1] = reduced_spinodal_pT(1.0);
        suite.check_err("C15.unit", "gas", "(T_r, p_r)(v_r = 1) = (1, 1) exactly",
                        std::abs(Tr1 - 1.0) + std::abs(pr1 - 1.0), 0.0);

        const auto branches = reduced_spinodal_branches(0.9);
        double worst = 1.0;
        if (branches.size() == 2)
            worst = std::max(std::abs(reduced_spinodal_Tr(branches[0].v_r) - 0.9),
                             std::abs(reduced_spinodal_Tr(branches[1].v_r) - 0.9));
        suite.check_err("C15.residual", "gas",
                        "T_r = 0.9 branch roots satisfy the reduced spinodal equation", worst,
                        1e-10);

        const ScanRange vr{0.4, 10.0, 501};
        const bool identical = emit_pt_boundary_csv(vr) == emit_pt_boundary_csv(vr) &&
                               emit_pt_boundary_branches_csv(0.9) ==
                                   emit_pt_boundary_branches_csv(0.9);
        suite.check_count("C15.determinism", "gas",
                          "pt-boundary CSV emission is byte-identical across runs",
                          identical ? 0 : 1);
    }
}

// ---- section: reaction ----

inline void run_reaction(Suite& suite) {
    const double R = 1.0;

    {  // C07: critical extents
        const CriticalExtent syn = critical_extent(synthesis_reaction());
        const CriticalExtent dis = critical_extent(dissociation_reaction());
        const CriticalExtent dsp = critical_extent(displacement_reaction());
        suite.check_err("C07.synthesis_xi", "reaction", "synthesis xi* = 0.4514 +- 5e-4",
                        std::abs(syn.xi_star - 0.4514), 5e-4);
        suite.check_err("C07.synthesis_W", "reaction", "synthesis W* = -9.507 +- 0.05",
                        std::abs(syn.w_star + 9.507), 0.05);
        suite.check_err("C07.dissociation_xi", "reaction", "dissociation xi* = 0.5486 +- 5e-4",
                        std::abs(dis.xi_star - 0.5486), 5e-4);
        suite.check_err("C07.displacement_xi", "reaction", "displacement xi* = 1/2 +- 1e-9",
                        std::abs(dsp.xi_star - 0.5), 1e-9);
        suite.check_err("C07.displacement_W", "reaction", "displacement W* = -8 +- 1e-9",
                        std::abs(dsp.w_star + 8.0), 1e-9);
        suite.check_err("C07.sum", "reaction", "xi*_synthesis + xi*_dissociation = 1 +- 1e-9",
                        std::abs(syn.xi_star + dis.xi_star - 1.0), 1e-9);
    }

    {  // C08: ideal isothermal mixture metric on a (p, xi) grid
        const double T = 1.3;
        double worst_det = 0.0, worst_R = 0.0, worst_third = 0.0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const double p = 0.5 + 2.0 * i / 9.0;
                const double xi = 0.05 + 0.9 * j / 9.0;
                const MetricValue m = ideal_isothermal_metric(T, p, xi, R);
                worst_det = std::max(worst_det,
                                     rel(determinant(m.g),
                                         -R * R * T * T / (p * p * xi * (1.0 - xi))));
                worst_R = std::max({worst_R, std::abs(curvature(m).scalar),
                                    std::abs(scalar_curvature_2d(m))});
                worst_third =
                    std::max({worst_third, rel(m.dg(0, 0, 0), 2.0 * R * T / (p * p * p)),
                              rel(m.dg(1, 1, 1), R * T * (2.0 * xi - 1.0) /
                                                     (xi * xi * (1.0 - xi) * (1.0 - xi)))});
            }
        suite.check_err("C08.det", "reaction", "ideal isothermal det = -R^2T^2/(p^2 xi(1-xi))",
                        worst_det, 1e-10);
        suite.check_err("C08.curvature", "reaction", "ideal isothermal scalar curvature vanishes",
                        worst_R, 1e-8);
        suite.check_err("C08.thirds", "reaction",
                        "third derivatives match 2RT/p^3 and RT(2xi-1)/(xi^2(1-xi)^2)",
                        worst_third, 1e-10);
    }

    {  // C09: convexity of the ideal mixing free energy
        const double T = 1.3, p = 0.9;
        const MixtureChemistry chem = default_ab_chemistry();
        const Stoichiometry ab = a_to_b_reaction();
        double worst_analytic = 0.0, worst_fd = 0.0;
        int non_positive = 0;
        const PotentialSurface surf = ideal_mixture_surface(chem, R);
        const auto value = surf.value_fn();
        for (int j = 0; j < 10; ++j) {
            const double xi = 0.05 + 0.9 * j / 9.0;
            const double expect = R * T / (xi * (1.0 - xi));
            const double analytic = d2G_dxi2(ab, xi, T, nullptr, R);
            worst_analytic = std::max(worst_analytic, rel(analytic, expect));
            if (!(analytic > 0.0)) ++non_positive;
            const Jet3 fd = fd_jet3(value, std::vector<double>{T, p, xi});
            worst_fd = std::max(worst_fd, rel(fd.hess(2, 2), expect));
        }
        suite.check_err("C09.analytic", "reaction", "d2G/dxi2 = RT/(xi(1-xi)) analytically",
                        worst_analytic, 1e-10);
        suite.check_err("C09.fd", "reaction",
                        "d2G/dxi2 matches finite differences of the explicit mixing free energy",
                        worst_fd, 1e-6);
        suite.check_count("C09.positive", "reaction", "d2G/dxi2 > 0 on (0, 1)", non_positive);
    }

    {  // C10: Theorem 3.2 round-trip on random stoichiometries
        std::mt19937_64 gen(20240610);
        std::uniform_real_distribution<double> n0d(0.5, 4.0), xid(0.0, 1.0);
        std::uniform_int_distribution<int> rd(2, 5), nud(-3, 3);
        const double T = 1.7;
        double worst = 0.0;
        int sign_failures = 0;
        int trials = 0;
        while (trials < 50) {
            const int r = rd(gen);
            std::vector<std::string> species;
            std::vector<int> nu;
            std::vector<double> n0;
            bool pos = false, neg = false;
            for (int i = 0; i < r; ++i) {
                species.push_back("S" + std::to_string(i));
                int v = 0;
                while (v == 0) v = nud(gen);
                pos |= v > 0;
                neg |= v < 0;
                nu.push_back(v);
                n0.push_back(n0d(gen));
            }
            if (!pos || !neg) continue;
            const Stoichiometry s(species, nu, n0);
            const FeasibilityInterval iv = feasibility_interval(s);
            const double width = iv.hi - iv.lo;
            if (!(width > 0.2)) continue;
            const double xi = iv.lo + (0.25 + 0.5 * xid(gen)) * width;
            bool deep = true;
            for (int i = 0; i < s.size(); ++i) deep &= (s.n0[i] + s.nu[i] * xi) > 0.05;
            if (!deep) continue;
            const double w0 = w_phase_boundary(s, xi);
            worst = std::max(worst, std::abs(d2G_dxi2(s, xi, T, [&](double) { return w0; }, R)) /
                                        (R * T));
            if (!(d2G_dxi2(s, xi, T, [&](double) { return w0 + 1e-6; }, R) > 0.0))
                ++sign_failures;
            if (!(d2G_dxi2(s, xi, T, [&](double) { return w0 - 1e-6; }, R) < 0.0))
                ++sign_failures;
            ++trials;
        }
        suite.check_err("C10.zero", "reaction",
                        "W on the boundary curve drives d2G/dxi2 to zero", worst, 1e-10);
        suite.check_count("C10.signs", "reaction",
                          "perturbing W by +-1e-6 flips convexity accordingly", sign_failures);
    }
}

// ---- section: solution ----

inline void run_solution(Suite& suite) {
    const double R = 1.0;

    {  // C11: ideal-solution degeneracy
        std::mt19937_64 gen(20240611);
        std::uniform_real_distribution<double> nd(0.2, 5.0), Td(0.8, 1.6);
        std::uniform_int_distribution<int> rd(2, 5);
        double worst_det = 0.0, worst_res = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const int r = rd(gen);
            std::vector<double> N(r);
            for (double& n : N) n = nd(gen);
            const double T = Td(gen);
            const SolutionSpec spec(N, default_mu_star(r), std::nullopt, R);
            const MetricValue m = isothermal_isobaric_metric(spec, T, 1.0);
            double n_min = N[0], n_max = N[0];
            for (double n : N) {
                n_min = std::min(n_min, n);
                n_max = std::max(n_max, n);
            }
            worst_det = std::max(worst_det, std::abs(determinant(m.g)) /
                                                std::pow(R * T / n_min, r));
            double res = 0.0;
            for (int i = 0; i < r; ++i) {
                double dot = 0.0;
                for (int k = 0; k < r; ++k) dot += m.g(i, k) * N[k];
                res = std::max(res, std::abs(dot));
            }
            worst_res = std::max(worst_res, res / (m.g.max_abs() * n_max));
        }
        suite.check_err("C11.det", "solution", "ideal isothermal-isobaric metric is degenerate",
                        worst_det, 1e-12);
        suite.check_err("C11.annihilate", "solution", "the ideal block annihilates the mole vector",
                        worst_res, 1e-12);
    }

    {  // C12: Margules binary vs the finite-difference Hessian of G
        const double T = 1.1, p = 0.8;
        const SolutionSpec spec({1.3, 2.1}, default_mu_star(2), margules_binary(1.7, R), R);
        const Jet3 fd = fd_jet3(total_gibbs_fn(spec), std::vector<double>{T, p, 1.3, 2.1});
        const BulkResponse bulk{-T * fd.hess(0, 0), fd.hess(0, 1), -fd.hess(1, 1)};
        const MetricValue m = open_system_metric(spec, bulk, T, p);
        double scale = std::max(m.g.max_abs(), fd.hess.max_abs());
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst, std::abs(m.g(i, k) - fd.hess(i, k)) / scale);
        suite.check_err("C12.fd", "solution",
                        "Margules metric equals the finite-difference Hessian of G", worst, 1e-6);

        const SolutionSpec unit({1.3, 2.1}, default_mu_star(2), margules_binary(0.0, R), R);
        suite.check_err("C12.gamma1", "solution", "deviation block vanishes exactly at gamma == 1",
                        deviation_decomposition(unit, T, p).deviation.max_abs(), 0.0);

        const MetricDecomposition d = deviation_decomposition(spec, T, p);
        const MetricValue total = isothermal_isobaric_metric(spec, T, p);
        double additivity = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                additivity = std::max(additivity,
                                      std::abs(d.ideal(i, k) + d.deviation(i, k) - total.g(i, k)) /
                                          total.g.max_abs());
        suite.check_err("C12.additivity", "solution", "ideal + deviation = total entrywise",
                        additivity, 1e-12);
    }
}

// ---- section: geometry ----

inline void run_geometry(Suite& suite) {
    // C13: cross-formula curvature agreement on random 2-D Hessian metrics
    std::mt19937_64 gen(20240613);
    std::uniform_real_distribution<double> gd(-2.0, 2.0), dgd(-1.0, 1.0);
    double worst_cross = 0.0, worst_1124 = 0.0;
    int trials = 0;
    while (trials < 50) {
        Matrix g(2, 2);
        g(0, 0) = gd(gen);
        g(0, 1) = g(1, 0) = gd(gen);
        g(1, 1) = gd(gen);
        const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1);
        const double scale = g.max_abs();
        if (std::abs(det) < 0.2 * scale * scale) continue;
        Tensor3 dg(2);
        dg(0, 0, 0) = dgd(gen);
        const double c112 = dgd(gen), c122 = dgd(gen);
        dg(0, 0, 1) = dg(0, 1, 0) = dg(1, 0, 0) = c112;
        dg(0, 1, 1) = dg(1, 0, 1) = dg(1, 1, 0) = c122;
        dg(1, 1, 1) = dgd(gen);
        const MetricValue m(g, dg, StatePoint("(x,y)", {"x", "y"}, {0.0, 0.0}));

        const CurvatureReport rep = curvature(m);       // Eq (1.20) contraction
        const double r_det = scalar_curvature_2d(m);    // determinant route + Eq (1.25) check
        worst_cross = std::max(worst_cross, rel(r_det, rep.scalar, 1e-14));

        const Matrix inv = inverse(m.g);
        worst_1124 = std::max(worst_1124, rel(rep.ricci(0, 0) * inv(0, 0),
                                              rep.ricci(1, 1) * inv(1, 1), 1e-14));
        ++trials;
    }
    suite.check_err("C13.cross", "geometry",
                    "determinant formula, Ricci contraction and 2(R11 n11 + R12 n12) agree",
                    worst_cross, 1e-8);
    suite.check_err("C13.identity", "geometry", "R_11 eta^11 = R_22 eta^22 on 2-D Hessian metrics",
                    worst_1124, 1e-8);
}

}  // namespace verify_detail

/// Run the acceptance criteria; `only` filters by section
/// (gas | reaction | solution | geometry), empty runs everything.
inline std::vector<CriterionResult> run_acceptance(const std::string& only = "") {
    if (!only.empty() && only != "gas" && only != "reaction" && only != "solution" &&
        only != "geometry")
        throw ValidationError("run_acceptance: unknown section '" + only +
                              "' (expected gas|reaction|solution|geometry)");
    verify_detail::Suite suite(only);
    if (suite.wants("gas")) verify_detail::run_gas(suite);
    if (suite.wants("reaction")) verify_detail::run_reaction(suite);
    if (suite.wants("solution")) verify_detail::run_solution(suite);
    if (suite.wants("geometry")) verify_detail::run_geometry(suite);
    return suite.take();
}

}  // namespace thermogeom
