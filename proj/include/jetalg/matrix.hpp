#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "jetalg/lattice.hpp"

namespace jetalg {

using QVector = std::vector<Rational>;

/// Dense exact-rational matrix, row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Rows given as nested lists; all rows must have equal length.
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
    static QMatrix from_rows(const std::vector<QVector> &rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMatrix &operator+=(const QMatrix &o);
    QMatrix &operator-=(const QMatrix &o);
    QMatrix &operator*=(const Rational &s);

    friend QMatrix operator+(QMatrix a, const QMatrix &b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix &b) { return a -= b; }
    friend QMatrix operator-(QMatrix a) { return a *= Rational(-1); }
    friend QMatrix operator*(const Rational &s, QMatrix a) { return a *= s; }
    friend QMatrix operator*(QMatrix a, const Rational &s) { return a *= s; }
    friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
    friend QVector operator*(const QMatrix &a, const QVector &v);
    friend bool operator==(const QMatrix &, const QMatrix &) = default;

    QMatrix transpose() const;
    Rational trace() const;
    QVector column(std::size_t j) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream &operator<<(std::ostream &os, const QMatrix &a);

/// ab - ba
QMatrix mat_commutator(const QMatrix &a, const QMatrix &b);

/// Reduced row echelon form, together with the pivot columns.
struct RowEchelon {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon rref(QMatrix a);

std::size_t rank(const QMatrix &a);

/// Basis of {x : a x = 0}; one vector per free column, with a 1 in that column.
std::vector<QVector> null_space_basis(const QMatrix &a);

/// Some X with a X = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<QMatrix> solve(const QMatrix &a, const QMatrix &b);

std::optional<QMatrix> inverse(const QMatrix &a);

/// Block-diagonal matrix diag(a, b).
QMatrix direct_sum(const QMatrix &a, const QMatrix &b);

/// p^{-1} a p; p must be invertible.
QMatrix conjugate(const QMatrix &a, const QMatrix &p, const QMatrix &p_inv);

} // namespace jetalg
