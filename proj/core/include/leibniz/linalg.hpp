#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/*
 * Exact elimination over the rationals.
 *
 * The forward phase is fraction-free: incoming rows are scaled to integers
 * and eliminated by cross-multiplication, dividing each updated row by its
 * content to keep entries small (Bareiss-style growth control). Rows are
 * kept fully reduced against each other, so the final normalization step
 * (divide by the leading entry) yields the unique RREF of the row space.
 *
 * Rank, kernel dimension and solvability computed over Q agree with the
 * values over C: they are ranks of rational matrices, and rank is invariant
 * under field extension. This is the bridge between the rational arithmetic
 * used here and structure theory stated over C.
 */

/// Streaming fraction-free eliminator. Rows can be fed one at a time,
/// which avoids materializing the very tall sparse systems produced by
/// derivation and homomorphism solvers.
class RowEliminator {
public:
    explicit RowEliminator(std::size_t width);

    /// Reduces the row against the rows seen so far. Returns true when the
    /// row increased the rank.
    bool add_row(const RatVector& row);
    bool add_integer_row(std::vector<Integer> row);

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
    bool has_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }

    /// Unique RREF of the row space of everything fed so far
    /// (rank many rows, leading ones, increasing pivot columns).
    RatMatrix rref_rows() const;

private:
    void normalize(std::vector<Integer>& row) const;

    std::size_t width_;
    std::vector<std::vector<Integer>> rows_; // ordered by pivot column
    std::vector<std::size_t> pivots_;        // pivot column of rows_[t]
    std::vector<int> pivot_of_col_;          // col -> row index or -1
};

struct RrefResult {
    RatMatrix mat;
    std::size_t rank = 0;
};

/// Unique reduced row echelon form, padded with zero rows to the input shape.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// One particular solution of m x = b (zeros in all free coordinates),
/// or nullopt when b is outside the column space.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Row space of a matrix in canonical (RREF) form.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Canonicalizes the span of the given rows.
    static Subspace span_of_rows(std::size_t ambient_dim, const std::vector<RatVector>& rows);
    static Subspace span_of_rows(const RatMatrix& rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    RatVector basis_row(std::size_t i) const { return basis_.row(i); }

    bool contains(const RatVector& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in the RREF basis; nullopt when v is outside.
    std::optional<RatVector> coordinates(const RatVector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    RatMatrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const RatMatrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Monic minimal polynomial, coefficients from constant to leading term.
std::vector<Rational> minimal_polynomial(const RatMatrix& m);

struct Eigenpair {
    Rational value;
    Subspace space;
};

/// All rational eigenvalues with their eigenspaces, sorted by eigenvalue.
/// nullopt when the rational eigenspaces do not fill the ambient space
/// (the split is not realizable over Q).
std::optional<std::vector<Eigenpair>> rational_eigensplit(const RatMatrix& m);

} // namespace leibniz

#endif
