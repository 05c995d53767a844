#ifndef LEIBNIZ_DERIVATIONS_HPP
#define LEIBNIZ_DERIVATIONS_HPP

#include "leibniz/structure.hpp"

namespace leibniz {

struct DerivationSpace {
    std::vector<RatMatrix> basis; // canonical kernel basis of the defining system

    // populated by split_derivations:
    bool split_populated = false;
    std::vector<RatMatrix> inner;      // right multiplications by the Levi part
    std::vector<RatMatrix> s_to_i;     // kill I, map S into I
    std::vector<RatMatrix> i_to_i;     // kill S, preserve I
};

/// Kernel of the linear system D[x,y] = [Dx,y] + [x,Dy] over all basis
/// pairs: dim^3 equations in dim^2 unknowns, assembled in (i,j)
/// lexicographic order with the coordinate index innermost.
DerivationSpace derivation_space(const LeibnizAlgebra& l);

/// The Leibniz product rule on all basis pairs.
bool is_derivation(const LeibnizAlgebra& l, const RatMatrix& m);

/// Three-way split of Der(L) for semisimple L: right multiplications by
/// the Levi subalgebra, homomorphisms S -> I, endomorphisms of I. The
/// system is solved once; the split projects each basis element into the
/// three block shapes in Levi coordinates. Throws SplitMismatch when the
/// parts fail to add up (non-semisimple input).
void split_derivations(DerivationSpace& ds, const LeibnizAlgebra& l,
                       const LeviDecomposition& levi);

struct FormulaReport {
    std::size_t brute_dim = 0; // ground truth: kernel dimension
    std::size_t dim_s = 0;
    std::size_t hom_dim = 0; // dim hom_S(S, I)
    std::size_t end_dim = 0; // dim End_S(I)
    // dim_s + hom_dim + end_dim; equals brute_dim for semisimple inputs
    std::size_t structural_dim = 0;
    // dim_s + sum_i n_i m_i + sum_c m_c^2, the closed-form count. The
    // middle term groups simple ideals into isomorphism classes; the class
    // multiplicity m_i is read from the first ideal of each class, which
    // is only canonical when n_i = 1 (see the per-ideal list below).
    std::size_t formula_dim = 0;
    std::size_t r = 0; // number of ideal classes
    std::size_t s = 0; // number of isotypic classes of I not matching any ideal
    std::vector<std::size_t> n;                    // class sizes, length r
    std::vector<std::size_t> m;                    // length r + s
    std::vector<std::size_t> adjoint_multiplicity; // per ideal: dim hom(S_j, I)
};

/// nullopt when a decomposition was not realizable over Q.
std::optional<FormulaReport> formula_report(const LeibnizAlgebra& l);

/// Same, reusing an already computed brute-force kernel dimension.
std::optional<FormulaReport> formula_report(const LeibnizAlgebra& l, std::size_t brute_dim);

} // namespace leibniz

#endif
