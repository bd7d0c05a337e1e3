#pragma once

/// Dense linear algebra for small symmetric systems (k <= 16): LU determinant,
/// Gauss-Jordan inverse, cyclic Jacobi eigenvalues. No external dependency;
/// the sizes here never justify one.

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "thermogeom/errors.hpp"

namespace thermogeom {

class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    /// Average with the transpose; makes g[i][j] == g[j][i] hold bitwise.
    void symmetrize() {
        assert(rows_ == cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j) {
                const double m = 0.5 * ((*this)(i, j) + (*this)(j, i));
                (*this)(i, j) = m;
                (*this)(j, i) = m;
            }
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// Cubic array t(i,j,k), i,j,k in [0,n).  Used for third derivatives and
/// Christoffel symbols.
class Tensor3 {
  public:
    Tensor3() = default;
    explicit Tensor3(int n, double fill = 0.0)
        : n_(n), a_(static_cast<std::size_t>(n) * n * n, fill) {}

    double& operator()(int i, int j, int k) {
        return a_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }
    double operator()(int i, int j, int k) const {
        return a_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }

    int dim() const { return n_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    /// Average over all 6 index permutations; exact symmetry as stored.
    void symmetrize() {
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                for (int k = j; k < n_; ++k) {
                    const double m = ((*this)(i, j, k) + (*this)(i, k, j) + (*this)(j, i, k) +
                                      (*this)(j, k, i) + (*this)(k, i, j) + (*this)(k, j, i)) /
                                     6.0;
                    (*this)(i, j, k) = m;
                    (*this)(i, k, j) = m;
                    (*this)(j, i, k) = m;
                    (*this)(j, k, i) = m;
                    (*this)(k, i, j) = m;
                    (*this)(k, j, i) = m;
                }
    }

    bool operator==(const Tensor3& o) const { return n_ == o.n_ && a_ == o.a_; }

  private:
    int n_ = 0;
    std::vector<double> a_;
};

/// Determinant by Gaussian elimination with partial pivoting.
inline double determinant(Matrix a) {
    const int n = a.rows();
    assert(n == a.cols());
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

/// Gauss-Jordan inverse with partial pivoting.
inline Matrix inverse(Matrix a) {
    const int n = a.rows();
    assert(n == a.cols());
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) throw DomainError("matrix inverse: singular matrix");
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const double d = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a(r, col);
            if (f == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Plenty for the k <= 16 signature classification this library needs.
inline std::vector<double> jacobi_eigenvalues(Matrix a, int max_sweeps = 64) {
    const int n = a.rows();
    assert(n == a.cols());
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off <= 1e-280) break;
        double scale = 0.0;
        for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
        if (std::sqrt(off) <= 1e-15 * std::max(scale, 1e-300)) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a(i, i);
    return eig;
}

}  // namespace thermogeom
