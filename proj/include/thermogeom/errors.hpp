#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace thermogeom {

/// Evaluation outside the declared domain of a model or surface
/// (v <= b, T <= 0, xi at a logarithmic boundary, non-finite stencil value, ...).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural misuse: wrong dimensions, invalid parameters, malformed config.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Metric determinant below the degeneracy threshold; carries the offending det.
class DegenerateMetricError : public DomainError {
  public:
    DegenerateMetricError(const std::string& what, double det)
        : DomainError(what), det_(det) {}
    double det() const { return det_; }

  private:
    double det_;
};

/// Closed-form curvature evaluated on its divergence locus; carries the
/// vanishing denominator.
class DivergenceError : public DomainError {
  public:
    DivergenceError(const std::string& what, double denominator)
        : DomainError(what), denominator_(denominator) {}
    double denominator() const { return denominator_; }

  private:
    double denominator_;
};

/// Mechanically unstable state: (dp/dv)_T >= 0, so k_T is undefined.
class UnstableStateError : public DomainError {
  public:
    explicit UnstableStateError(const std::string& what) : DomainError(what) {}
};

/// Extent of reaction outside the feasibility interval; lists the species
/// whose mole numbers would go negative.
class InfeasibleExtentError : public DomainError {
  public:
    InfeasibleExtentError(const std::string& what, std::vector<std::string> negative_species)
        : DomainError(what), negative_species_(std::move(negative_species)) {}
    const std::vector<std::string>& negative_species() const { return negative_species_; }

  private:
    std::vector<std::string> negative_species_;
};

/// An internal cross-check between two independent routes failed.
class ConsistencyError : public std::logic_error {
  public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace thermogeom
