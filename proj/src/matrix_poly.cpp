#include "scx/matrix_poly.hpp"

#include <stdexcept>

namespace scx {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative shape");
    a_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int k) {
    RationalMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch");
    RationalMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            if (at(i, t).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, t) * o.at(t, j);
        }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

MatrixPoly::MatrixPoly(int k, int degree_cap) : k_(k), cap_(degree_cap) {
    if (k <= 0) throw std::invalid_argument("MatrixPoly: size must be positive");
    e_.assign(static_cast<size_t>(k) * k, BiPoly(degree_cap));
}

MatrixPoly MatrixPoly::identity(int k, int degree_cap) {
    MatrixPoly m(k, degree_cap);
    for (int i = 0; i < k; ++i) m.at(i, i).add_term(0, 0, Rational(1));
    return m;
}

MatrixPoly MatrixPoly::matrix_unit(int k, int degree_cap, int i, int j) {
    MatrixPoly m(k, degree_cap);
    m.at(i, j).add_term(0, 0, Rational(1));
    return m;
}

MatrixPoly& MatrixPoly::operator+=(const MatrixPoly& o) {
    if (k_ != o.k_ || cap_ != o.cap_)
        throw std::invalid_argument("MatrixPoly: size or cap mismatch");
    for (size_t t = 0; t < e_.size(); ++t) e_[t] += o.e_[t];
    return *this;
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
    if (a.k_ != b.k_ || a.cap_ != b.cap_)
        throw std::invalid_argument("MatrixPoly: size or cap mismatch");
    MatrixPoly out(a.k_, a.cap_);
    for (int i = 0; i < a.k_; ++i)
        for (int t = 0; t < a.k_; ++t) {
            if (a.at(i, t).is_zero()) continue;
            for (int j = 0; j < a.k_; ++j) {
                if (b.at(t, j).is_zero()) continue;
                out.at(i, j) += a.at(i, t) * b.at(t, j);
            }
        }
    return out;
}

MatrixPoly MatrixPoly::times_monomial(int m, int n) const {
    MatrixPoly out(k_, cap_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            for (const auto& [mn, c] : at(i, j).terms())
                out.at(i, j).add_term(mn.first + m, mn.second + n, c);
    return out;
}

RationalMatrix MatrixPoly::evaluate(const Rational& lambda, const Rational& mu) const {
    RationalMatrix out(k_, k_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) out.at(i, j) = at(i, j).evaluate(lambda, mu);
    return out;
}

int rational_rank(const std::vector<RationalMatrix>& mats) {
    if (mats.empty()) return 0;
    const int rows = mats.front().rows();
    const int cols = mats.front().cols();
    const size_t width = static_cast<size_t>(rows) * cols;
    for (const auto& m : mats)
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument("rational_rank: inconsistent shapes");

    // Fully reduced basis of the span: every basis row is pivot-normalized and
    // zero at all other pivot columns, so a fresh row reduces in one pass.
    std::vector<std::vector<Rational>> basis;
    std::vector<size_t> pivot_col;
    for (const auto& m : mats) {
        std::vector<Rational> row;
        row.reserve(width);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) row.push_back(m.at(i, j));

        for (size_t b = 0; b < basis.size(); ++b) {
            const Rational factor = row[pivot_col[b]];
            if (factor.is_zero()) continue;
            for (size_t c = 0; c < width; ++c)
                if (!basis[b][c].is_zero()) row[c] -= factor * basis[b][c];
        }
        size_t p = 0;
        while (p < width && row[p].is_zero()) ++p;
        if (p == width) continue;
        const Rational inv = Rational(1) / row[p];
        for (size_t c = 0; c < width; ++c)
            if (!row[c].is_zero()) row[c] *= inv;
        for (size_t b = 0; b < basis.size(); ++b) {
            const Rational factor = basis[b][p];
            if (factor.is_zero()) continue;
            for (size_t c = 0; c < width; ++c)
                if (!row[c].is_zero()) basis[b][c] -= factor * row[c];
        }
        basis.push_back(std::move(row));
        pivot_col.push_back(p);
    }
    return static_cast<int>(basis.size());
}

}  // namespace scx
