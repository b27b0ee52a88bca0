#include "jetalg/matrix.hpp"

#include <algorithm>

namespace jetalg {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw Error("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        a(i, i) = 1;
    return a;
}

QMatrix QMatrix::from_rows(const std::vector<QVector> &rows, std::size_t cols) {
    QMatrix a(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error("ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), a.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return a;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational &q) { return sgn(q) == 0; });
}

QMatrix &QMatrix::operator+=(const QMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix dimension mismatch in addition");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

QMatrix &QMatrix::operator-=(const QMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix dimension mismatch in subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

QMatrix &QMatrix::operator*=(const Rational &s) {
    for (auto &q : data_)
        q *= s;
    return *this;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
    if (a.cols_ != b.rows_)
        throw Error("matrix dimension mismatch in product");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational &aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

QVector operator*(const QMatrix &a, const QVector &v) {
    if (a.cols_ != v.size())
        throw Error("matrix-vector dimension mismatch");
    QVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0)
                out[i] += a(i, j) * v[j];
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Rational QMatrix::trace() const {
    if (!is_square())
        throw Error("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

QVector QMatrix::column(std::size_t j) const {
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

std::ostream &operator<<(std::ostream &os, const QMatrix &a) {
    os << '[';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a.cols(); ++j)
            os << (j ? ", " : "") << to_string(a(i, j));
        os << ']';
    }
    return os << ']';
}

QMatrix mat_commutator(const QMatrix &a, const QMatrix &b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
        throw Error("commutator needs square matrices of equal size");
    return a * b - b * a;
}

RowEchelon rref(QMatrix a) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && sgn(a(p, col)) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(row, j));
        const Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || sgn(a(i, col)) == 0)
                continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (sgn(a(row, j)) != 0)
                    a(i, j) -= f * a(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

std::size_t rank(const QMatrix &a) { return rref(a).pivots.size(); }

std::vector<QVector> null_space_basis(const QMatrix &a) {
    const auto [r, pivots] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        QVector v(a.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMatrix> solve(const QMatrix &a, const QMatrix &b) {
    if (a.rows() != b.rows())
        throw Error("solve: row count mismatch");
    const std::size_t n = a.cols();
    QMatrix aug(a.rows(), n + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            aug(i, n + j) = b(i, j);
    }
    const auto [r, pivots] = rref(std::move(aug));
    QMatrix x(n, b.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(pivots[k], j) = r(k, n + j);
    }
    return x;
}

std::optional<QMatrix> inverse(const QMatrix &a) {
    if (!a.is_square())
        throw Error("inverse of a non-square matrix");
    if (rank(a) != a.rows())
        return std::nullopt;
    return solve(a, QMatrix::identity(a.rows()));
}

QMatrix direct_sum(const QMatrix &a, const QMatrix &b) {
    QMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

QMatrix conjugate(const QMatrix &a, const QMatrix &p, const QMatrix &p_inv) { return p_inv * a * p; }

} // namespace jetalg
