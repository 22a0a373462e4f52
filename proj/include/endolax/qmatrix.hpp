#pragma once

// Dense matrices over exact rationals. Small dimensions only (n <= 24);
// plain Gaussian elimination is entirely adequate here.

#include <cassert>
#include <stdexcept>
#include <vector>

#include "endolax/rational.hpp"

namespace endolax {

using QVector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const Rational& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Rational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        Rational t;
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        QMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        QMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }

    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix diff shape mismatch");
        QMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    QVector apply(const QVector& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
        QVector r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

/// Basis of the null space, one vector per free column.
inline std::vector<QVector> kernel_basis(QMatrix m) {
    const int n = m.cols();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        QVector v(n);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Columns of the original matrix that span its column space.
inline std::vector<QVector> column_space_basis(const QMatrix& m) {
    QMatrix work = m;
    std::vector<int> pivots = rref(work);
    std::vector<QVector> basis;
    for (int c : pivots) {
        QVector col(m.rows());
        for (int r = 0; r < m.rows(); ++r) col[r] = m.at(r, c);
        basis.push_back(std::move(col));
    }
    return basis;
}

inline QMatrix from_columns(int rows, const std::vector<QVector>& cols) {
    QMatrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

inline QMatrix hstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    QMatrix m(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

}  // namespace endolax
