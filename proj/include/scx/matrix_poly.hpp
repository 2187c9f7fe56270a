#pragma once

#include "scx/bipoly.hpp"

#include <vector>

namespace scx {

/// Dense matrix of exact rationals (evaluation images, rank computations).
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Square matrix of truncated bivariate polynomials sharing one degree cap.
class MatrixPoly {
public:
    MatrixPoly(int k, int degree_cap);  // zero matrix
    static MatrixPoly identity(int k, int degree_cap);
    static MatrixPoly matrix_unit(int k, int degree_cap, int i, int j);

    int size() const { return k_; }
    int degree_cap() const { return cap_; }
    BiPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * k_ + j]; }
    const BiPoly& at(int i, int j) const { return e_[static_cast<size_t>(i) * k_ + j]; }

    MatrixPoly& operator+=(const MatrixPoly& o);
    friend MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
    friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);

    /// The entrywise product with z^m w^n (so z * P is times_monomial(1, 0)).
    MatrixPoly times_monomial(int m, int n) const;

    /// Entrywise evaluation at (lambda, mu).
    RationalMatrix evaluate(const Rational& lambda, const Rational& mu) const;

    bool operator==(const MatrixPoly& o) const { return k_ == o.k_ && cap_ == o.cap_ && e_ == o.e_; }

private:
    int k_;
    int cap_;
    std::vector<BiPoly> e_;  // row-major
};

/// Dimension over Q of the span of the given equal-shaped matrices, computed
/// by exact Gaussian elimination on their flattenings.
int rational_rank(const std::vector<RationalMatrix>& mats);

}  // namespace scx
