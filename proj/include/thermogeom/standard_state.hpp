#pragma once

/// Standard-state chemical potential family
///
///   mu(T, p) = a0 + a1 T + a2 T ln T + (b0 + b1 T) p - 1/2 b2 p^2
///
/// a simple differentiable shape with closed-form derivatives through third
/// order.  The b-coefficients are zero for the pure-temperature mu(T) used by
/// closed-reaction mixtures; the p terms give solutions non-trivial partial
/// molar volumes.

#include <cmath>

namespace thermogeom {

inline constexpr double kGasConstant = 8.31446261815324;  // J / (mol K)

struct StandardPotential {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0;
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;

    double value(double T, double p) const {
        return a0 + a1 * T + a2 * T * std::log(T) + (b0 + b1 * T) * p - 0.5 * b2 * p * p;
    }
    double dT(double T, double p) const { return a1 + a2 * (std::log(T) + 1.0) + b1 * p; }
    double dp(double T, double p) const { return b0 + b1 * T - b2 * p; }
    double dTT(double T, double /*p*/) const { return a2 / T; }
    double dTp(double /*T*/, double /*p*/) const { return b1; }
    double dpp(double /*T*/, double /*p*/) const { return -b2; }
    double dTTT(double T, double /*p*/) const { return -a2 / (T * T); }
    // all remaining third derivatives vanish for this family
};

}  // namespace thermogeom
