#ifndef LEIBNIZ_AUTOMORPHISMS_HPP
#define LEIBNIZ_AUTOMORPHISMS_HPP

#include "leibniz/structure.hpp"

namespace leibniz {

/*
 * The automorphism group is infinite; nothing here enumerates it. These
 * operations verify membership, decompose a verified automorphism into
 * its Levi blocks, assemble one from verified components, and factor it
 * through the subgroup fixing the block split.
 */

/// Invertible and bracket-preserving on all basis pairs.
bool is_automorphism(const LeibnizAlgebra& l, const RatMatrix& m);

/// exp of a nilpotent matrix, as an exact finite sum.
RatMatrix exp_nilpotent(const RatMatrix& m);

struct BlockDecomposition {
    RatMatrix phi1;  // S -> S, an automorphism of the Levi subalgebra
    RatMatrix phi2;  // S -> I, a module homomorphism into the twisted ideal
    RatMatrix phi_i; // I -> I, a module isomorphism onto the twisted ideal
};

/// Blocks of a verified automorphism in Levi coordinates. Every
/// automorphism maps I onto I, so the upper-right block vanishes and the
/// lower-triangular block matrix reassembles to the input.
BlockDecomposition block_decompose(const LeibnizAlgebra& l, const LeviDecomposition& levi,
                                   const RatMatrix& phi);

/// Lower-triangular assembly from verified components. Preconditions
/// (each reported by name on failure):
///   phi1 an automorphism of S;
///   phi_i invertible with phi_i rho(x) = rho(phi1 x) phi_i;
///   phi2 with phi2([x,y]) = rho(phi1 y) phi2(x).
RatMatrix assemble(const LeibnizAlgebra& l, const LeviDecomposition& levi,
                   const RatMatrix& phi1, const RatMatrix& phi_i, const RatMatrix& phi2);

/// Factorization phi = psi . eta with psi fixing the block split
/// (phi2 block zero) and eta identity on both diagonal blocks.
std::pair<RatMatrix, RatMatrix> factor_semidirect(const LeibnizAlgebra& l,
                                                  const LeviDecomposition& levi,
                                                  const RatMatrix& phi);

/// Whether an automorphism of S extends to the semidirect algebra:
/// the ideal must be isomorphic to its twist as an S-module.
bool extendable(const RatMatrix& sigma, const ModuleRep& ideal);

/// Block-permutation automorphism of an m-fold direct sum of identical
/// copies; perm maps copy t to copy perm[t].
RatMatrix swap_automorphism(const LeibnizAlgebra& l, const std::vector<std::size_t>& perm);

} // namespace leibniz

#endif
