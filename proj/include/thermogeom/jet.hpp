#pragma once

/// Third-order jets of scalar potentials and the surface abstraction every
/// higher module consumes.  A surface is a constitutive relation
/// Phi(x^1..x^k): coordinate names plus a jet evaluator, either analytic or
/// backed by finite differences.

#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thermogeom/errors.hpp"
#include "thermogeom/linalg.hpp"

namespace thermogeom {

/// A point on a chart: ordered named coordinates, all finite, names unique.
struct StatePoint {
    std::string chart;
    std::vector<std::string> names;
    std::vector<double> values;

    StatePoint(std::string chart_, std::vector<std::string> names_, std::vector<double> values_)
        : chart(std::move(chart_)), names(std::move(names_)), values(std::move(values_)) {
        if (names.size() != values.size())
            throw ValidationError("StatePoint: names/values length mismatch");
        std::set<std::string> seen;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!std::isfinite(values[i]))
                throw ValidationError("StatePoint: non-finite coordinate '" + names[i] + "'");
            if (!seen.insert(names[i]).second)
                throw ValidationError("StatePoint: duplicate coordinate name '" + names[i] + "'");
        }
    }

    int dim() const { return static_cast<int>(values.size()); }

    std::string describe() const {
        std::ostringstream os;
        os << chart << " (";
        for (std::size_t i = 0; i < names.size(); ++i)
            os << (i ? ", " : "") << names[i] << "=" << values[i];
        os << ")";
        return os.str();
    }
};

/// Value, gradient, Hessian and fully symmetric third-derivative tensor of a
/// potential at a point.  hess and third are symmetric exactly as stored.
struct Jet3 {
    double value = 0.0;
    std::vector<double> grad;
    Matrix hess;
    Tensor3 third;

    explicit Jet3(int dim = 0) : grad(dim, 0.0), hess(dim, dim), third(dim) {}

    int dim() const { return static_cast<int>(grad.size()); }

    void symmetrize() {
        hess.symmetrize();
        third.symmetrize();
    }
};

inline void check_jet_shape(const Jet3& jet, int dim, const char* where) {
    if (jet.dim() != dim || jet.hess.rows() != dim || jet.hess.cols() != dim ||
        jet.third.dim() != dim)
        throw ValidationError(std::string(where) + ": jet shape does not match declared dimension");
}

enum class JetKind { analytic, finite_difference };

/// A constitutive relation with a deterministic jet evaluator and an optional
/// domain guard.  Evaluation outside the domain is an error, not a NaN.
struct PotentialSurface {
    int dim = 0;
    std::string chart;
    JetKind kind = JetKind::analytic;
    std::vector<std::string> coord_names;
    std::function<bool(const std::vector<double>&)> domain;       // null -> everywhere
    std::function<Jet3(const std::vector<double>&)> evaluator;

    bool in_domain(const std::vector<double>& x) const { return !domain || domain(x); }

    Jet3 eval(const std::vector<double>& x) const {
        if (static_cast<int>(x.size()) != dim)
            throw ValidationError("PotentialSurface::eval: point dimension " +
                                  std::to_string(x.size()) + " != surface dimension " +
                                  std::to_string(dim));
        if (!in_domain(x)) {
            std::ostringstream os;
            os << "PotentialSurface::eval: point outside domain of " << chart << " surface (";
            for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
            os << ")";
            throw DomainError(os.str());
        }
        Jet3 jet = evaluator(x);
        check_jet_shape(jet, dim, "PotentialSurface::eval");
        jet.symmetrize();
        return jet;
    }

    Jet3 eval(const StatePoint& p) const { return eval(p.values); }

    /// The scalar value function, for finite-difference cross checks.
    std::function<double(const std::vector<double>&)> value_fn() const {
        return [*this](const std::vector<double>& x) { return eval(x).value; };
    }

    StatePoint point(std::vector<double> x) const { return StatePoint(chart, coord_names, std::move(x)); }
};

/// Wrap closed-form jet functions as a surface.  Symmetry is enforced the
/// same way as for finite-difference jets, so downstream tensor formulas may
/// assume fully symmetric third derivatives.
inline PotentialSurface make_analytic_surface(
    int dim, std::string chart, std::vector<std::string> coord_names,
    std::function<Jet3(const std::vector<double>&)> jet_fn,
    std::function<bool(const std::vector<double>&)> domain = nullptr) {
    if (dim < 1) throw ValidationError("make_analytic_surface: dim must be >= 1");
    if (static_cast<int>(coord_names.size()) != dim)
        throw ValidationError("make_analytic_surface: coordinate name count != dim");
    PotentialSurface s;
    s.dim = dim;
    s.chart = std::move(chart);
    s.kind = JetKind::analytic;
    s.coord_names = std::move(coord_names);
    s.domain = std::move(domain);
    s.evaluator = std::move(jet_fn);
    return s;
}

}  // namespace thermogeom
