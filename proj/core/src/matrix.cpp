#include "leibniz/matrix.hpp"

#include <ostream>

#include "leibniz/errors.hpp"

namespace leibniz {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionMismatch("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& entries) {
    RatMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    RatVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

RatVector RatMatrix::col(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void RatMatrix::set_row(std::size_t i, const RatVector& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: wrong length");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational RatMatrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::unvec(const RatVector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("unvec: wrong length");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix addition shape mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix subtraction shape mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

RatMatrix operator-(const RatMatrix& a) {
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
    return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    Rational tmp;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (bkj == 0) continue;
                tmp = aik * bkj;
                c(i, j) += tmp;
            }
        }
    return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols() != v.size())
        throw DimensionMismatch("matrix-vector shape mismatch");
    RatVector w(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && v[j] != 0) w[i] += a(i, j) * v[j];
    return w;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector addition length mismatch");
    RatVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector subtraction length mismatch");
    RatVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

RatVector operator*(const Rational& s, const RatVector& v) {
    RatVector c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
    return c;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RatVector unit_vector(std::size_t dim, std::size_t index) {
    RatVector v(dim);
    v.at(index) = 1;
    return v;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            if (a(i1, j1) == 0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    c(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
        }
    return c;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << rat_str(m(i, j));
    }
    return os << "]";
}

} // namespace leibniz
