#pragma once

/// Hessian metrics and their geometry: determinant/signature, Christoffel
/// symbols, Ricci tensor and scalar curvature.  For a metric eta_ij that is
/// the Hessian of a potential, the whole curvature pipeline closes in terms
/// of eta, its inverse and the fully symmetric third derivatives eta_ij,m.

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "thermogeom/errors.hpp"
#include "thermogeom/jet.hpp"
#include "thermogeom/linalg.hpp"

namespace thermogeom {

/// |det| < degeneracy_tol * scale^k declares the metric degenerate; inside
/// [degeneracy_tol, near_degenerate_tol) curvature is computed but flagged,
/// since it blows up as det -> 0.
inline constexpr double kDegeneracyTol = 1e-10;
inline constexpr double kNearDegenerateTol = 1e-6;

enum class Signature { positive_definite, negative_definite, indefinite, degenerate };

struct SignatureInfo {
    Signature kind = Signature::degenerate;
    int n_positive = 0;
    int n_negative = 0;
};

inline const char* to_string(Signature s) {
    switch (s) {
        case Signature::positive_definite: return "positive-definite";
        case Signature::negative_definite: return "negative-definite";
        case Signature::indefinite: return "indefinite";
        default: return "degenerate";
    }
}

/// Symmetric metric eta_ij at a point with its coordinate derivatives
/// eta_ij,m (fully symmetric).
struct MetricValue {
    Matrix g;
    Tensor3 dg;
    StatePoint point;

    MetricValue(Matrix g_, Tensor3 dg_, StatePoint point_)
        : g(std::move(g_)), dg(std::move(dg_)), point(std::move(point_)) {
        if (g.rows() != g.cols() || g.rows() != dg.dim() || g.rows() != point.dim())
            throw ValidationError("MetricValue: inconsistent dimensions");
        g.symmetrize();
        dg.symmetrize();
    }

    int dim() const { return g.rows(); }
};

struct CurvatureReport {
    Tensor3 christoffel;  // Gamma^l_ij stored as (l, i, j)
    Matrix ricci;
    double scalar = 0.0;
    double det = 0.0;
    SignatureInfo signature;
    bool near_degenerate = false;
};

/// The metric is the potential's Hessian; its derivatives are the third jet.
inline MetricValue hessian_metric(const PotentialSurface& surface, const StatePoint& x) {
    Jet3 jet = surface.eval(x);
    return MetricValue(jet.hess, jet.third, x);
}

inline double degeneracy_scale(const Matrix& g) { return g.max_abs(); }

inline std::pair<double, SignatureInfo> det_and_signature(const MetricValue& m,
                                                          double degeneracy_tol = kDegeneracyTol) {
    const int n = m.dim();
    const double det = determinant(m.g);
    const double scale = degeneracy_scale(m.g);
    SignatureInfo info;
    if (scale == 0.0 || std::abs(det) < degeneracy_tol * std::pow(scale, n)) {
        info.kind = Signature::degenerate;
        return {det, info};
    }
    for (double e : jacobi_eigenvalues(m.g)) {
        if (e > 0.0) ++info.n_positive;
        else ++info.n_negative;
    }
    if (info.n_negative == 0) info.kind = Signature::positive_definite;
    else if (info.n_positive == 0) info.kind = Signature::negative_definite;
    else info.kind = Signature::indefinite;
    return {det, info};
}

namespace detail {
inline void require_non_degenerate(const MetricValue& m, double det, const char* where) {
    const double scale = degeneracy_scale(m.g);
    if (scale == 0.0 || std::abs(det) < kDegeneracyTol * std::pow(scale, m.dim())) {
        std::ostringstream os;
        os << where << ": degenerate metric at " << m.point.describe() << " (det = " << det << ")";
        throw DegenerateMetricError(os.str(), det);
    }
}
}  // namespace detail

/// Gamma^k_ij = 1/2 sum_m eta_ij,m eta^{km}.  Equals the general Levi-Civita
/// symbol whenever eta_ij,m is fully symmetric.
inline Tensor3 christoffel(const MetricValue& m) {
    const int n = m.dim();
    const double det = determinant(m.g);
    detail::require_non_degenerate(m, det, "christoffel");
    const Matrix inv = inverse(m.g);
    Tensor3 gamma(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double acc = 0.0;
                for (int mm = 0; mm < n; ++mm) acc += m.dg(i, j, mm) * inv(k, mm);
                gamma(k, i, j) = 0.5 * acc;
                gamma(k, j, i) = 0.5 * acc;
            }
    return gamma;
}

/// Ricci tensor R_ik = 1/4 (eta_ij,m eta_sn,k - eta_sn,j eta_ki,m)
/// eta^{mn} eta^{js}, the Hessian-metric contraction of the curvature tensor.
inline Matrix ricci_tensor(const MetricValue& m, const Matrix& inv) {
    const int n = m.dim();
    Matrix ric(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                for (int mm = 0; mm < n; ++mm)
                    for (int s = 0; s < n; ++s)
                        for (int nn = 0; nn < n; ++nn)
                            acc += (m.dg(i, j, mm) * m.dg(s, nn, k) -
                                    m.dg(s, nn, j) * m.dg(k, i, mm)) *
                                   inv(mm, nn) * inv(j, s);
            ric(i, k) = 0.25 * acc;
        }
    return ric;
}

inline CurvatureReport curvature(const MetricValue& m) {
    const int n = m.dim();
    auto [det, sig] = det_and_signature(m);
    detail::require_non_degenerate(m, det, "curvature");

    CurvatureReport report;
    report.det = det;
    report.signature = sig;
    const double scale = degeneracy_scale(m.g);
    report.near_degenerate = std::abs(det) < kNearDegenerateTol * std::pow(scale, n);

    const Matrix inv = inverse(m.g);
    report.christoffel = christoffel(m);
    report.ricci = ricci_tensor(m, inv);

    double r = 0.0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) r += report.ricci(i, k) * inv(i, k);
    report.scalar = r;
    return report;
}

/// 2-D scalar curvature by the determinant formula
///
///   R = -1/(2 det(eta)^2) det [ eta11  eta11,1  eta11,2 ]
///                             [ eta12  eta12,1  eta12,2 ]
///                             [ eta22  eta22,1  eta22,2 ]
///
/// cross-checked internally against R = 2 (R_11 eta^11 + R_12 eta^12).
inline double scalar_curvature_2d(const MetricValue& m) {
    if (m.dim() != 2) throw ValidationError("scalar_curvature_2d: metric must be 2-D");
    const double det = determinant(m.g);
    detail::require_non_degenerate(m, det, "scalar_curvature_2d");

    Matrix k(3, 3);
    k(0, 0) = m.g(0, 0); k(0, 1) = m.dg(0, 0, 0); k(0, 2) = m.dg(0, 0, 1);
    k(1, 0) = m.g(0, 1); k(1, 1) = m.dg(0, 1, 0); k(1, 2) = m.dg(0, 1, 1);
    k(2, 0) = m.g(1, 1); k(2, 1) = m.dg(1, 1, 0); k(2, 2) = m.dg(1, 1, 1);
    const double det3 = determinant(k);
    const double r_det = -det3 / (2.0 * det * det);

    const Matrix inv = inverse(m.g);
    const Matrix ric = ricci_tensor(m, inv);
    const double r_ricci = 2.0 * (ric(0, 0) * inv(0, 0) + ric(0, 1) * inv(0, 1));

    // roundoff floor for the 3x3 determinant route
    double col[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) col[c] = std::max(col[c], std::abs(k(i, c)));
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * col[0] * col[1] * col[2] /
                         (det * det);
    const double diff = std::abs(r_det - r_ricci);
    if (diff > 1e-8 * std::max(std::abs(r_det), std::abs(r_ricci)) + std::abs(floor)) {
        std::ostringstream os;
        os << "scalar_curvature_2d: determinant route (" << r_det
           << ") and Ricci-contraction route (" << r_ricci << ") disagree at "
           << m.point.describe();
        throw ConsistencyError(os.str());
    }
    return r_det;
}

}  // namespace thermogeom
