#ifndef LEIBNIZ_STRUCTURE_HPP
#define LEIBNIZ_STRUCTURE_HPP

#include "leibniz/module.hpp"

namespace leibniz {

struct LeviDecomposition {
    Subspace s_part;     // semisimple Lie subalgebra complement, RREF basis
    IdealSubspace ideal; // the squares ideal
    RatMatrix section;   // columns: lifted images of the liezation basis
};

/*
 * Constructive Levi lifting for algebras with semisimple liezation.
 * Starting from the complement section s of the quotient map, the defect
 * c(x,y) = [s(x),s(y)] - s([x,y]) lies in the squares ideal, and the
 * correction t: G -> I must satisfy t([x,y]) - t(x).y = c(x,y). Because
 * [L,I] = 0 and I is abelian, this is an ordinary linear system; for
 * semisimple liezation it is always solvable, and the free coordinates
 * are zeroed for a deterministic result.
 */
LeviDecomposition levi_lift(const LeibnizAlgebra& l);

/// The lifted subalgebra as an abstract Lie algebra in its RREF basis.
LeibnizAlgebra levi_subalgebra(const LeibnizAlgebra& l, const LeviDecomposition& levi);

/// The squares ideal as a module over the lifted subalgebra.
ModuleRep levi_module(const LeibnizAlgebra& l, const LeviDecomposition& levi);

/// Simple ideals of a semisimple Lie algebra: eigenspaces of a generic
/// element of End of the adjoint module. nullopt when an ideal is not
/// defined over Q.
std::optional<std::vector<Subspace>> simple_ideals(const LeibnizAlgebra& s_lie);

struct GraphComponent {
    Subspace space; // in ambient coordinates of the input algebra
    std::size_t multiplicity = 0;
    std::size_t irreducible_dim = 0;
    bool trivial_action = false; // excluded from edges when set
};

struct StructureGraph {
    std::vector<Subspace> nodes;          // simple ideals of S, ambient coords
    std::vector<GraphComponent> components; // isotypic components of I
    std::vector<std::pair<std::size_t, std::size_t>> edges; // (component, node)
};

/// Edge (C, S_i) present exactly when some basis element of S_i acts
/// nonzero on C. Adjacency of two nodes is a shared component; summands
/// are connected components of this graph.
std::optional<StructureGraph> structure_graph(const LeibnizAlgebra& l,
                                              const LeviDecomposition& levi);

struct Summand {
    Subspace s_part;
    Subspace i_part;
};

struct SummandDecomposition {
    std::vector<Summand> summands;
    std::vector<std::size_t> trivial_components; // indices into graph components
    bool squares_action_full = true;             // [I, S] == I
    StructureGraph graph;
};

/// Connected components of the structure graph, each realized as a
/// subalgebra. Verifies per summand that every component satisfies
/// [C, S] = C and that the summand's nodes are connected; flags
/// zero-action components separately. nullopt when a split was not
/// realizable over Q.
std::optional<SummandDecomposition> indecomposable_summands(const LeibnizAlgebra& l);

} // namespace leibniz

#endif
