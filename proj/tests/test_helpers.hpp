#pragma once

// Shared helpers for the test suites: relative comparison with a small
// absolute floor, random generators with fixed seeds, jet/matrix diffs.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "thermogeom/jet.hpp"
#include "thermogeom/linalg.hpp"

namespace test {

inline double rel_err(double actual, double expected, double abs_floor = 0.0) {
    const double denom = std::max({std::abs(actual), std::abs(expected), abs_floor, 1e-300});
    return std::abs(actual - expected) / denom;
}

inline double max_rel_err(const thermogeom::Matrix& a, const thermogeom::Matrix& b,
                          double abs_floor) {
    double scale = std::max({a.max_abs(), b.max_abs(), abs_floor});
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / scale);
    return worst;
}

inline double max_rel_err(const thermogeom::Tensor3& a, const thermogeom::Tensor3& b,
                          double abs_floor) {
    double scale = std::max({a.max_abs(), b.max_abs(), abs_floor});
    double worst = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                worst = std::max(worst, std::abs(a(i, j, k) - b(i, j, k)) / scale);
    return worst;
}

inline double max_rel_err(const thermogeom::Jet3& a, const thermogeom::Jet3& b,
                          double abs_floor = 1.0) {
    double worst = rel_err(a.value, b.value, abs_floor);
    for (int i = 0; i < a.dim(); ++i) worst = std::max(worst, rel_err(a.grad[i], b.grad[i], abs_floor));
    worst = std::max(worst, max_rel_err(a.hess, b.hess, abs_floor));
    worst = std::max(worst, max_rel_err(a.third, b.third, abs_floor));
    return worst;
}

class Rng {
  public:
    explicit Rng(unsigned long long seed) : gen_(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace test
