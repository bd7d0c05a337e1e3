#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_helpers.hpp"
#include "thermogeom/gas.hpp"
#include "thermogeom/metric.hpp"
#include "thermogeom/numdiff.hpp"

using namespace thermogeom;

namespace {

// Random 2-D metric with fully symmetric third derivatives, bounded away
// from degeneracy.
MetricValue random_metric_2d(test::Rng& rng) {
    for (;;) {
        Matrix g(2, 2);
        g(0, 0) = rng.uniform(-2.0, 2.0);
        g(0, 1) = g(1, 0) = rng.uniform(-2.0, 2.0);
        g(1, 1) = rng.uniform(-2.0, 2.0);
        const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1);
        const double scale = g.max_abs();
        if (std::abs(det) < 0.2 * scale * scale) continue;
        Tensor3 dg(2);
        dg(0, 0, 0) = rng.uniform(-1.0, 1.0);
        const double c112 = rng.uniform(-1.0, 1.0);
        const double c122 = rng.uniform(-1.0, 1.0);
        dg(0, 0, 1) = dg(0, 1, 0) = dg(1, 0, 0) = c112;
        dg(0, 1, 1) = dg(1, 0, 1) = dg(1, 1, 0) = c122;
        dg(1, 1, 1) = rng.uniform(-1.0, 1.0);
        return MetricValue(std::move(g), std::move(dg),
                           StatePoint("(x,y)", {"x", "y"}, {0.0, 0.0}));
    }
}

// x^4 y^2 + x^2 + y^6 + y^2 exp(2x): a potential with genuinely non-zero
// curvature, used for the textbook oracle.  Analytic jets keep the
// Christoffel field smooth enough to differentiate numerically.
PotentialSurface curved_surface() {
    auto jet_fn = [](const std::vector<double>& p) {
        const double x = p[0], y = p[1];
        const double e = std::exp(2.0 * x);
        Jet3 jet(2);
        jet.value = std::pow(x, 4) * y * y + x * x + std::pow(y, 6) + y * y * e;
        jet.grad[0] = 4.0 * x * x * x * y * y + 2.0 * x + 2.0 * y * y * e;
        jet.grad[1] = 2.0 * std::pow(x, 4) * y + 6.0 * std::pow(y, 5) + 2.0 * y * e;
        jet.hess(0, 0) = 12.0 * x * x * y * y + 2.0 + 4.0 * y * y * e;
        jet.hess(0, 1) = jet.hess(1, 0) = 8.0 * x * x * x * y + 4.0 * y * e;
        jet.hess(1, 1) = 2.0 * std::pow(x, 4) + 30.0 * std::pow(y, 4) + 2.0 * e;
        const double xxx = 24.0 * x * y * y + 8.0 * y * y * e;
        const double xxy = 24.0 * x * x * y + 8.0 * y * e;
        const double xyy = 8.0 * x * x * x + 4.0 * e;
        const double yyy = 120.0 * y * y * y;
        jet.third(0, 0, 0) = xxx;
        jet.third(0, 0, 1) = jet.third(0, 1, 0) = jet.third(1, 0, 0) = xxy;
        jet.third(0, 1, 1) = jet.third(1, 0, 1) = jet.third(1, 1, 0) = xyy;
        jet.third(1, 1, 1) = yyy;
        return jet;
    };
    return make_analytic_surface(2, "(x,y)", {"x", "y"}, jet_fn);
}

}  // namespace

TEST_CASE("hessian_metric of a quadratic is the identity with zero derivatives") {
    auto jet_fn = [](const std::vector<double>& x) {
        Jet3 jet(2);
        jet.value = 0.5 * (x[0] * x[0] + x[1] * x[1]);
        jet.grad = {x[0], x[1]};
        jet.hess = Matrix::identity(2);
        return jet;
    };
    const PotentialSurface surf = make_analytic_surface(2, "(x,y)", {"x", "y"}, jet_fn);
    const MetricValue m = hessian_metric(surf, surf.point({1.0, 2.0}));
    CHECK(m.g == Matrix::identity(2));
    CHECK(m.dg.max_abs() == 0.0);

    const CurvatureReport rep = curvature(m);
    CHECK(rep.scalar == 0.0);
    CHECK(rep.christoffel.max_abs() == 0.0);
    CHECK(rep.ricci.max_abs() == 0.0);
    CHECK(rep.signature.kind == Signature::positive_definite);
}

TEST_CASE("hessian_metric of the ideal-gas energy matches Eq-style closed form") {
    const double R = 1.0, cv = 1.5;
    const GasModel ideal = GasModel::ideal(R, cv);
    const PotentialSurface surf = energy_surface(ideal);
    const double T = 1.3, v = 0.8;
    const double s = ideal.entropy(T, v);
    const MetricValue m = hessian_metric(surf, surf.point({s, v}));
    const double p = ideal.pressure(T, v);
    const double cp = cv + R;
    CHECK(test::rel_err(m.g(0, 0), T / cv) < 1e-12);
    CHECK(test::rel_err(m.g(0, 1), -p / cv) < 1e-12);
    CHECK(test::rel_err(m.g(1, 1), cp * p / (v * cv)) < 1e-12);
}

TEST_CASE("det_and_signature") {
    SECTION("identity metric") {
        MetricValue m(Matrix::identity(3), Tensor3(3),
                      StatePoint("(x,y,z)", {"x", "y", "z"}, {0, 0, 0}));
        auto [det, sig] = det_and_signature(m);
        CHECK(det == 1.0);
        CHECK(sig.kind == Signature::positive_definite);
    }
    SECTION("negative definite and indefinite") {
        Matrix g = Matrix::identity(2);
        g(0, 0) = -2.0;
        g(1, 1) = -3.0;
        MetricValue neg(g, Tensor3(2), StatePoint("(x,y)", {"x", "y"}, {0, 0}));
        CHECK(det_and_signature(neg).second.kind == Signature::negative_definite);

        g(1, 1) = 3.0;
        MetricValue ind(g, Tensor3(2), StatePoint("(x,y)", {"x", "y"}, {0, 0}));
        const auto sig = det_and_signature(ind).second;
        CHECK(sig.kind == Signature::indefinite);
        CHECK(sig.n_positive == 1);
        CHECK(sig.n_negative == 1);
    }
    SECTION("degeneracy is scale-relative") {
        Matrix g(2, 2);
        g(0, 0) = 1e8;
        g(0, 1) = g(1, 0) = 1e8;
        g(1, 1) = 1e8 + 1e-4;  // det = 1e4, but scale^2 = 1e16
        MetricValue m(g, Tensor3(2), StatePoint("(x,y)", {"x", "y"}, {0, 0}));
        CHECK(det_and_signature(m).second.kind == Signature::degenerate);
    }
    SECTION("ideal-gas Weinhold metric is positive definite with det RT^2/(cv v^2)") {
        const GasModel ideal = GasModel::ideal(1.0, 1.5);
        const MetricValue m = weinhold_metric(ideal, {1.2, 0.9});
        auto [det, sig] = det_and_signature(m);
        CHECK(sig.kind == Signature::positive_definite);
        CHECK(test::rel_err(det, 1.0 * 1.2 * 1.2 / (1.5 * 0.9 * 0.9)) < 1e-12);
    }
}

TEST_CASE("christoffel") {
    SECTION("1-D metric g = x at x = 2 with dg = 1 gives 1/4") {
        Matrix g(1, 1);
        g(0, 0) = 2.0;
        Tensor3 dg(1);
        dg(0, 0, 0) = 1.0;
        MetricValue m(g, dg, StatePoint("(x)", {"x"}, {2.0}));
        const Tensor3 gamma = christoffel(m);
        CHECK(gamma(0, 0, 0) == 0.25);
    }
    SECTION("degenerate metric raises an error carrying the determinant") {
        Matrix g(2, 2);
        g(0, 0) = 1.0;
        g(0, 1) = g(1, 0) = 1.0;
        g(1, 1) = 1.0;
        MetricValue m(g, Tensor3(2), StatePoint("(x,y)", {"x", "y"}, {0, 0}));
        try {
            christoffel(m);
            FAIL("expected DegenerateMetricError");
        } catch (const DegenerateMetricError& e) {
            CHECK(e.det() == 0.0);
        }
    }
    SECTION("matches the general Levi-Civita formula for symmetric dg") {
        test::Rng rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const MetricValue m = random_metric_2d(rng);
            const Tensor3 gamma = christoffel(m);
            const Matrix inv = inverse(m.g);
            for (int k = 0; k < 2; ++k)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        double lc = 0.0;
                        for (int mm = 0; mm < 2; ++mm)
                            lc += 0.5 * inv(k, mm) *
                                  (m.dg(j, mm, i) + m.dg(i, mm, j) - m.dg(i, j, mm));
                        CHECK(std::abs(gamma(k, i, j) - lc) < 1e-10 * (1.0 + std::abs(lc)));
                    }
        }
    }
}

TEST_CASE("curvature pipeline against the textbook Riemann tensor built from Christoffels") {
    // dGamma terms are obtained by finite differences of the Christoffel
    // field of an explicit surface; this is the tie-breaking oracle.
    const PotentialSurface surf = curved_surface();
    const std::vector<double> x0 = {1.1, 0.7};
    const MetricValue m = hessian_metric(surf, surf.point(x0));
    const CurvatureReport rep = curvature(m);

    const double h = 1e-5;
    auto gamma_at = [&](double x, double y) {
        return christoffel(hessian_metric(surf, surf.point({x, y})));
    };
    const Tensor3 g0 = gamma_at(x0[0], x0[1]);
    Tensor3 dgamma_dx(2), dgamma_dy(2);
    {
        const Tensor3 xp = gamma_at(x0[0] + h, x0[1]), xm = gamma_at(x0[0] - h, x0[1]);
        const Tensor3 yp = gamma_at(x0[0], x0[1] + h), ym = gamma_at(x0[0], x0[1] - h);
        for (int l = 0; l < 2; ++l)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    dgamma_dx(l, i, j) = (xp(l, i, j) - xm(l, i, j)) / (2.0 * h);
                    dgamma_dy(l, i, j) = (yp(l, i, j) - ym(l, i, j)) / (2.0 * h);
                }
    }
    auto dgamma = [&](int l, int k, int i, int j) {  // d Gamma^l_{ki} / dx^j
        return j == 0 ? dgamma_dx(l, k, i) : dgamma_dy(l, k, i);
    };
    // R^l_{ijk} = Gamma^l_{ki,j} - Gamma^l_{ji,k} + G^l_{jp} G^p_{ki} - G^l_{kp} G^p_{ji}
    auto riemann = [&](int l, int i, int j, int k) {
        double r = dgamma(l, k, i, j) - dgamma(l, j, i, k);
        for (int p = 0; p < 2; ++p)
            r += g0(l, j, p) * g0(p, k, i) - g0(l, k, p) * g0(p, j, i);
        return r;
    };
    Matrix ricci_tb(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            double r = 0.0;
            for (int j = 0; j < 2; ++j) r += riemann(j, i, j, k);
            ricci_tb(i, k) = r;
        }
    const Matrix inv = inverse(m.g);
    double scalar_tb = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) scalar_tb += ricci_tb(i, k) * inv(i, k);

    CHECK(test::max_rel_err(rep.ricci, ricci_tb, 1e-6) < 1e-5);
    CHECK(test::rel_err(rep.scalar, scalar_tb) < 1e-5);
    CHECK(std::abs(rep.scalar) > 1e-3);  // the oracle point is genuinely curved
}

TEST_CASE("cross-formula agreement on random 2-D Hessian metrics") {
    test::Rng rng(20240602);
    for (int trial = 0; trial < 50; ++trial) {
        const MetricValue m = random_metric_2d(rng);
        const CurvatureReport rep = curvature(m);
        const double r_det = scalar_curvature_2d(m);  // includes the Eq(1.25) cross-check
        CHECK(test::rel_err(r_det, rep.scalar, 1e-14) < 1e-8);

        const Matrix inv = inverse(m.g);
        // R_11 eta^11 = R_22 eta^22
        const double lhs = rep.ricci(0, 0) * inv(0, 0);
        const double rhs = rep.ricci(1, 1) * inv(1, 1);
        CHECK(test::rel_err(lhs, rhs, 1e-14) < 1e-8);
        // Ricci symmetry
        CHECK(test::rel_err(rep.ricci(0, 1), rep.ricci(1, 0), 1e-14) < 1e-10);
    }
}

TEST_CASE("scalar_curvature_2d") {
    SECTION("identity metric with zero derivatives is flat") {
        MetricValue m(Matrix::identity(2), Tensor3(2), StatePoint("(x,y)", {"x", "y"}, {0, 0}));
        CHECK(scalar_curvature_2d(m) == 0.0);
    }
    SECTION("ideal-gas Weinhold metric is flat") {
        const GasModel ideal = GasModel::ideal(1.0, 1.5);
        const MetricValue m = weinhold_metric(ideal, {1.1, 1.4});
        CHECK(std::abs(scalar_curvature_2d(m)) < 1e-8);
        CHECK(std::abs(curvature(m).scalar) < 1e-8);
    }
    SECTION("x^4 + y^4 + x^2 y^2 at (1,1) agrees with the general contraction") {
        auto value = [](const std::vector<double>& x) {
            return std::pow(x[0], 4) + std::pow(x[1], 4) + x[0] * x[0] * x[1] * x[1];
        };
        const PotentialSurface surf = make_fd_surface(2, "(x,y)", {"x", "y"}, value);
        const MetricValue m = hessian_metric(surf, surf.point({1.0, 1.0}));
        CHECK(test::rel_err(scalar_curvature_2d(m), curvature(m).scalar, 1e-12) < 1e-8);
    }
    SECTION("rejects non-2-D metrics") {
        MetricValue m(Matrix::identity(3), Tensor3(3),
                      StatePoint("(x,y,z)", {"x", "y", "z"}, {0, 0, 0}));
        CHECK_THROWS_AS(scalar_curvature_2d(m), ValidationError);
    }
}

TEST_CASE("curvature flags and errors near degeneracy") {
    const GasModel vdw = GasModel::van_der_waals(1.0, 0.1, 1.0, 1.5);
    const SpinodalCurves sp = spinodal(vdw);
    const double v = 1.0;
    const double Ts = sp.temperature(v);

    SECTION("on the spinodal the metric is degenerate") {
        const MetricValue m = weinhold_metric(vdw, {Ts, v});
        CHECK(det_and_signature(m).second.kind == Signature::degenerate);
        CHECK_THROWS_AS(curvature(m), DegenerateMetricError);
    }
    SECTION("slightly off the spinodal curvature is large and flagged") {
        const MetricValue m = weinhold_metric(vdw, {Ts * (1.0 + 1e-7), v});
        const CurvatureReport rep = curvature(m);
        CHECK(rep.near_degenerate);
        CHECK(std::abs(rep.scalar) > 1e6);
    }
    SECTION("far from the spinodal nothing is flagged") {
        const MetricValue m = weinhold_metric(vdw, {2.5 * Ts, v});
        CHECK_FALSE(curvature(m).near_degenerate);
    }
}
