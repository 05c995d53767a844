#ifndef LEIBNIZ_MODULE_HPP
#define LEIBNIZ_MODULE_HPP

#include <optional>

#include "leibniz/algebra.hpp"

namespace leibniz {

/*
 * Right modules over a Lie algebra, given by one action matrix per basis
 * element: v . b_i is computed as action[i] * v on column vectors.
 *
 * The right-module axiom is rho([x,y]) = rho(y) rho(x) - rho(x) rho(y).
 * It is the linearization of the right Leibniz identity: expanding
 * [v,[x,y]] = [[v,x],y] - [[v,y],x] in operators acting on v gives
 * exactly that commutation rule, with the reversed order on the right.
 */
struct ModuleRep {
    LeibnizAlgebra lie; // must pass is_lie; builders verify
    std::size_t mdim = 0;
    std::vector<RatMatrix> action; // one mdim x mdim matrix per Lie basis element

    RatMatrix act(const RatVector& x) const; // action of a general element
};

struct ModuleViolation {
    std::size_t i, j;
    RatMatrix defect; // rho([b_i,b_j]) - (rho(b_j) rho(b_i) - rho(b_i) rho(b_j))
};

/// Empty exactly when the right-module axiom holds on all basis pairs.
std::vector<ModuleViolation> module_check(const ModuleRep& m);

/// Throws if module_check is nonempty; used by all builders.
void require_module(const ModuleRep& m, const std::string& what);

/// The ideal I as a module over the subalgebra S: action matrices are
/// right multiplications restricted to I, in I's RREF basis.
/// Throws NotInvariant when [I, s] is not inside I for some basis s.
ModuleRep module_from_ideal(const LeibnizAlgebra& l, const Subspace& s, const Subspace& i);

/// S acting on itself by right multiplication.
ModuleRep adjoint_module(const LeibnizAlgebra& lie);

/// Restriction of the action to an invariant subspace, in its RREF basis.
/// Throws NotInvariant when the subspace is not preserved.
ModuleRep submodule_on(const ModuleRep& m, const Subspace& w);

ModuleRep trivial_module(const LeibnizAlgebra& lie, std::size_t mdim);
ModuleRep module_direct_sum(const ModuleRep& a, const ModuleRep& b); // same Lie algebra

struct HomSpace {
    std::vector<RatMatrix> basis; // mdim_target x mdim_source, canonical order
    std::size_t dim() const { return basis.size(); }
};

/// Canonical basis of {f : f rho_M(x) = rho_N(x) f for all x}.
/// The dimension over Q equals the dimension over C (rank argument).
HomSpace hom_space(const ModuleRep& m, const ModuleRep& n); // throws AlgebraMismatch

std::size_t end_dim(const ModuleRep& m);

/// Nonzero module with one-dimensional endomorphism algebra.
bool is_irreducible(const ModuleRep& m);

struct IsotypicComponent {
    Subspace space;
    std::size_t multiplicity = 0;
    std::size_t irreducible_dim = 0;
};

struct IsotypicDecomposition {
    std::vector<IsotypicComponent> components; // ordered by lowest pivot column
};

/// Splits a completely reducible module into isotypic components by
/// eigensplitting a deterministic generic central element of End(M).
/// nullopt when the split is not realizable over Q.
std::optional<IsotypicDecomposition> isotypic_split(const ModuleRep& m);

/// Module over direct_sum(G1, G2) on the tensor basis, block convention
/// (a, b) -> a * mdim2 + b:
///   rho(x)(v1 (x) v2) = rho1(x1)v1 (x) v2 + v1 (x) rho2(x2)v2.
/// The tensor product of irreducibles is irreducible.
ModuleRep tensor_module(const ModuleRep& m1, const ModuleRep& m2);

/// Same space with the action v . x = v sigma(x) for a verified Lie
/// algebra automorphism sigma of the acting algebra.
ModuleRep twist_module(const ModuleRep& m, const RatMatrix& sigma); // throws NotAutomorphism

/// dim hom(M,N) = end_dim(M) = end_dim(N). For completely reducible
/// modules this forces matching isotypic multiplicities:
/// sum a_i b_i = sum a_i^2 = sum b_i^2 implies a = b.
bool modules_isomorphic(const ModuleRep& m, const ModuleRep& n);

} // namespace leibniz

#endif
