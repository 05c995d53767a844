#ifndef LEIBNIZ_CATALOG_HPP
#define LEIBNIZ_CATALOG_HPP

#include "leibniz/module.hpp"

namespace leibniz {

/*
 * Builders for the bundled algebras and modules. Every builder verifies
 * its own axioms before returning (fail-fast): algebras pass
 * leibniz_defects, modules pass module_check.
 */

/// Basis (e, h, f) with [e,h] = 2e = -[h,e], [h,f] = 2f = -[f,h],
/// [e,f] = h = -[f,e]. Simple, Killing form nondegenerate.
LeibnizAlgebra sl2();

/// The (m+1)-dimensional irreducible right sl2-module on v_0..v_m:
///   [v_i, h] = (m - 2i) v_i
///   [v_i, f] = v_{i+1}          (i < m)
///   [v_i, e] = -i(m - i + 1) v_{i-1}
/// The ladder coefficients are forced by the right-module axiom given
/// [v_i, f] = v_{i+1}: the recurrence c_{i+1} = c_i - (m - 2i), c_0 = 0.
ModuleRep sl2_module(std::size_t m);

/// Ladder variant with [v_i,e] = i v_{i+1} and [v_i,f] = (m-i) v_{i-1}.
/// Deliberately fails module_check for m >= 1 (the e/h compatibility
/// defect); kept for exercising the checker. Not verified on build.
ModuleRep sl2_module_inconsistent(std::size_t m);

/// The 10-dimensional algebra on {e1,h1,f1,e2,h2,f2,x1..x4}: two sl2
/// copies acting one-sidedly on a 4-dimensional square ideal. Indecomposable
/// but not simple: the ideal is irreducible over the sl2+sl2 sum while it
/// splits over each copy alone.
LeibnizAlgebra example_2_11();

/// Algebra on S (+) M with bracket [(g1,v1),(g2,v2)] = ([g1,g2], v1.g2).
/// S must be Lie, M a verified right S-module; the result always passes
/// leibniz_defects. Optional labels name the module part of the basis.
LeibnizAlgebra semidirect(const LeibnizAlgebra& s, const ModuleRep& m,
                          const std::vector<std::string>& module_labels = {});

/// (sl2 (+) sl2) acting on the tensor of the (m+1)- and (n+1)-dimensional
/// irreducible modules; basis labels x{i}y{j}. Requires m, n >= 1.
/// example_3_6(1, 1) equals example_2_11 up to the label bijection
/// x_{1+i+2j} <-> x{i}y{j}.
LeibnizAlgebra example_3_6(std::size_t m, std::size_t n);

/// Traceless 3x3 matrices in the basis (E12,E13,E21,E23,E31,E32,H1,H2)
/// with H1 = E11-E22, H2 = E22-E33; bracket [x,y] = xy - yx.
LeibnizAlgebra sl3();

/// Standard 3-dimensional right sl3-module with action v.x = x^t v
/// (the transpose reverses products, giving the right-module axiom).
ModuleRep sl3_standard();

/// The outer automorphism x -> -x^t of sl3, as a matrix in the sl3 basis.
RatMatrix sl3_transpose();

/// Direct sum of m identical copies with per-copy label suffixes.
LeibnizAlgebra multi_copy(const LeibnizAlgebra& l, std::size_t m);

} // namespace leibniz

#endif
