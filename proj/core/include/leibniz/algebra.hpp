#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/*
 * A finite-dimensional algebra over Q presented by structure constants:
 * [b_i, b_j] = sum_k c(i,j,k) b_k. The defining identity checked by
 * leibniz_defects is the right Leibniz identity
 *   [x,[y,z]] = [[x,y],z] - [[x,z],y],
 * equivalently: every right multiplication operator is a derivation.
 */
class LeibnizAlgebra {
public:
    LeibnizAlgebra() = default;
    LeibnizAlgebra(std::size_t dim, std::vector<std::string> labels);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return sc_[(i * dim_ + j) * dim_ + k];
    }
    void set_c(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

    /// [b_i, b_j] as a coefficient vector.
    RatVector basis_bracket(std::size_t i, std::size_t j) const;

    friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
        return a.dim_ == b.dim_ && a.sc_ == b.sc_;
    }
    friend bool operator!=(const LeibnizAlgebra& a, const LeibnizAlgebra& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Rational> sc_; // dim^3, (i,j,k) row-major
};

struct Element {
    const LeibnizAlgebra* algebra = nullptr;
    RatVector coeffs;
};

Element element(const LeibnizAlgebra& a, RatVector coeffs);

/// Bilinear expansion through the structure constants.
RatVector bracket_vec(const LeibnizAlgebra& a, const RatVector& x, const RatVector& y);
Element bracket(const Element& x, const Element& y); // throws AlgebraMismatch

struct LeibnizDefect {
    std::size_t i, j, k;
    RatVector defect; // [b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j]
};

/// Empty exactly when the algebra satisfies the Leibniz identity.
std::vector<LeibnizDefect> leibniz_defects(const LeibnizAlgebra& a);

/// c(i,j,k) == -c(j,i,k) for all triples.
bool is_lie(const LeibnizAlgebra& a);

struct IdealSubspace {
    Subspace space;
    bool is_left_ideal = false;  // [L, I] contained in I
    bool is_right_ideal = false; // [I, L] contained in I
    bool is_two_sided = false;
};

/// Span of the squares, via polarization: {[b_i,b_i]} together with
/// {[b_i,b_j]+[b_j,b_i], i<j}. Verifies that the span is a two-sided ideal
/// annihilated from the left ([L,I] = 0); throws IdealViolation otherwise.
IdealSubspace squares_ideal(const LeibnizAlgebra& a);

struct Liezation {
    LeibnizAlgebra algebra;             // the quotient by the squares ideal
    RatMatrix projection;               // quotient coords <- ambient coords
    std::vector<std::size_t> complement; // ambient indices of the chosen complement basis
};

/// Quotient by the squares ideal, in the complement basis formed by the
/// lexicographically first standard basis vectors completing the RREF
/// basis of the ideal. The result always passes is_lie.
Liezation liezation(const LeibnizAlgebra& a);

/// kappa(b_i,b_j) = trace(ad b_i . ad b_j); requires a Lie algebra.
RatMatrix killing_form(const LeibnizAlgebra& g); // throws NotLie

/// Semisimplicity test: the Killing form of the liezation is nondegenerate.
bool is_semisimple_liezation(const LeibnizAlgebra& a);

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

/// {x : [x,L] = [L,x] = 0}
Subspace center(const LeibnizAlgebra& a);

/// Span of all products.
Subspace derived_subalgebra(const LeibnizAlgebra& a);

/// Matrix of y -> [y, x].
RatMatrix right_mult(const LeibnizAlgebra& a, const RatVector& x);

/// Matrix of y -> [x, y].
RatMatrix left_mult(const LeibnizAlgebra& a, const RatVector& x);

/// Invertible and bracket-preserving on all basis pairs.
bool is_algebra_automorphism(const LeibnizAlgebra& a, const RatMatrix& m);

/// Same algebra in the basis given by the columns of p.
LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const RatMatrix& p);

/// Structure constants of a bracket-closed subspace, expressed in its
/// RREF basis. Throws NotInvariant when the subspace is not closed.
LeibnizAlgebra subalgebra_on(const LeibnizAlgebra& a, const Subspace& s,
                             const std::string& label_prefix = "s");

} // namespace leibniz

#endif
