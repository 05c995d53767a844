#ifndef LEIBNIZ_MATRIX_HPP
#define LEIBNIZ_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Dense matrix of exact rationals, row-major. Vectors are columns:
/// a matrix acts on a RatVector from the left.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix diagonal(const RatVector& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;
    void set_row(std::size_t i, const RatVector& v);

    RatMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    /// Row-major flattening; unvec is its inverse.
    RatVector vec() const { return data_; }
    static RatMatrix unvec(const RatVector& v, std::size_t rows, std::size_t cols);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);
RatVector operator*(const RatMatrix& a, const RatVector& v);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
bool is_zero(const RatVector& v);
RatVector unit_vector(std::size_t dim, std::size_t index);

/// Kronecker product, row-major block convention:
/// (a ⊗ b)((i1,i2),(j1,j2)) = a(i1,j1) b(i2,j2) with i = i1*b.rows()+i2.
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

} // namespace leibniz

#endif
