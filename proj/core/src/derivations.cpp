#include "leibniz/derivations.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

DerivationSpace derivation_space(const LeibnizAlgebra& l) {
    const std::size_t n = l.dim();
    const std::size_t width = n * n; // unknown D, row-major

    std::vector<RatMatrix> rm, lm;
    rm.reserve(n);
    lm.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        rm.push_back(right_mult(l, unit_vector(n, t)));
        lm.push_back(left_mult(l, unit_vector(n, t)));
    }

    RowEliminator elim(width);
    RatVector row(width);
    std::vector<std::size_t> touched;
    touched.reserve(3 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatVector bij = l.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                touched.clear();
                // D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j], coordinate k
                for (std::size_t c = 0; c < n; ++c)
                    if (bij[c] != 0) {
                        row[k * n + c] += bij[c];
                        touched.push_back(k * n + c);
                    }
                for (std::size_t r = 0; r < n; ++r)
                    if (rm[j](k, r) != 0) {
                        row[r * n + i] -= rm[j](k, r);
                        touched.push_back(r * n + i);
                    }
                for (std::size_t r = 0; r < n; ++r)
                    if (lm[i](k, r) != 0) {
                        row[r * n + j] -= lm[i](k, r);
                        touched.push_back(r * n + j);
                    }
                bool nonzero = false;
                for (std::size_t u : touched)
                    if (row[u] != 0) { nonzero = true; break; }
                if (nonzero) elim.add_row(row);
                for (std::size_t u : touched) row[u] = 0;
            }
        }

    Subspace ker = kernel_basis(elim.rref_rows());
    DerivationSpace ds;
    for (std::size_t t = 0; t < ker.dim(); ++t)
        ds.basis.push_back(RatMatrix::unvec(ker.basis_row(t), n, n));
    return ds;
}

bool is_derivation(const LeibnizAlgebra& l, const RatMatrix& m) {
    if (m.rows() != l.dim() || m.cols() != l.dim()) return false;
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i) {
        RatVector di = m.col(i);
        for (std::size_t j = 0; j < n; ++j) {
            RatVector lhs = m * l.basis_bracket(i, j);
            RatVector rhs = bracket_vec(l, di, unit_vector(n, j)) +
                            bracket_vec(l, unit_vector(n, i), m.col(j));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

void split_derivations(DerivationSpace& ds, const LeibnizAlgebra& l,
                       const LeviDecomposition& levi) {
    const std::size_t n = l.dim();
    const std::size_t g = levi.s_part.dim();
    const std::size_t k = levi.ideal.space.dim();
    if (g + k != n) throw SplitMismatch("split_derivations: Levi data does not span");

    LeibnizAlgebra s_abs = levi_subalgebra(l, levi);

    // Levi coordinates: columns of T are the S basis then the I basis
    RatMatrix t_mat(n, n);
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t r = 0; r < n; ++r) t_mat(r, a) = levi.s_part.basis()(a, r);
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t r = 0; r < n; ++r) t_mat(r, g + b) = levi.ideal.space.basis()(b, r);
    auto t_inv_opt = inverse(t_mat);
    if (!t_inv_opt) throw SplitMismatch("split_derivations: Levi basis is singular");
    const RatMatrix& t_inv = *t_inv_opt;

    // inner part: right multiplications by the Levi basis
    std::vector<RatMatrix> inner;
    RowEliminator inner_rank(n * n);
    for (std::size_t a = 0; a < g; ++a) {
        RatMatrix r = right_mult(l, levi.s_part.basis_row(a));
        inner_rank.add_row(r.vec());
        inner.push_back(std::move(r));
    }
    if (inner_rank.rank() != g)
        throw SplitMismatch("split_derivations: inner part degenerate (center?)");

    // right-adjoint matrices of the abstract Levi algebra, for recovering
    // the inner component of each derivation
    RatMatrix ad_cols(g * g, g);
    for (std::size_t t = 0; t < g; ++t) {
        RatVector v = right_mult(s_abs, unit_vector(g, t)).vec();
        for (std::size_t r = 0; r < g * g; ++r) ad_cols(r, t) = v[r];
    }

    RowEliminator span_s_to_i(n * n), span_i_to_i(n * n), span_all(n * n);
    std::vector<RatMatrix> s_to_i, i_to_i;
    for (const auto& d : ds.basis) {
        RatMatrix dl = t_inv * d * t_mat;
        for (std::size_t r = 0; r < g; ++r)
            for (std::size_t c = g; c < n; ++c)
                if (dl(r, c) != 0)
                    throw SplitMismatch("split_derivations: derivation maps I outside I");

        RatMatrix a_block(g, g);
        for (std::size_t r = 0; r < g; ++r)
            for (std::size_t c = 0; c < g; ++c) a_block(r, c) = dl(r, c);
        auto x = solve(ad_cols, a_block.vec());
        if (!x) throw SplitMismatch("split_derivations: S-block is not a right multiplication");

        RatVector x_full(n);
        for (std::size_t t = 0; t < g; ++t)
            if ((*x)[t] != 0) x_full = x_full + (*x)[t] * levi.s_part.basis_row(t);
        RatMatrix rest = d - right_mult(l, x_full);
        RatMatrix rl = t_inv * rest * t_mat;
        for (std::size_t r = 0; r < g; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (rl(r, c) != 0)
                    throw SplitMismatch("split_derivations: residue has an S-block");

        RatMatrix part1(n, n), part2(n, n);
        {
            RatMatrix levi1(n, n), levi2(n, n);
            for (std::size_t r = g; r < n; ++r)
                for (std::size_t c = 0; c < g; ++c) levi1(r, c) = rl(r, c);
            for (std::size_t r = g; r < n; ++r)
                for (std::size_t c = g; c < n; ++c) levi2(r, c) = rl(r, c);
            part1 = t_mat * levi1 * t_inv;
            part2 = t_mat * levi2 * t_inv;
        }
        if (!is_derivation(l, part1) || !is_derivation(l, part2))
            throw SplitMismatch("split_derivations: projected parts are not derivations");
        if (span_s_to_i.add_row(part1.vec())) s_to_i.push_back(std::move(part1));
        if (span_i_to_i.add_row(part2.vec())) i_to_i.push_back(std::move(part2));
    }

    for (const auto& d : inner) span_all.add_row(d.vec());
    for (const auto& d : s_to_i) span_all.add_row(d.vec());
    for (const auto& d : i_to_i) span_all.add_row(d.vec());
    if (span_all.rank() != g + s_to_i.size() + i_to_i.size() ||
        span_all.rank() != ds.basis.size())
        throw SplitMismatch("split_derivations: parts do not sum directly to Der(L)");

    ds.inner = std::move(inner);
    ds.s_to_i = std::move(s_to_i);
    ds.i_to_i = std::move(i_to_i);
    ds.split_populated = true;
}

std::optional<FormulaReport> formula_report(const LeibnizAlgebra& l) {
    return formula_report(l, derivation_space(l).basis.size());
}

std::optional<FormulaReport> formula_report(const LeibnizAlgebra& l, std::size_t brute_dim) {
    FormulaReport rep;
    rep.brute_dim = brute_dim;

    LeviDecomposition levi = levi_lift(l);
    ModuleRep i_mod = levi_module(l, levi);
    const LeibnizAlgebra& s_abs = i_mod.lie;
    rep.dim_s = levi.s_part.dim();

    ModuleRep adjoint = adjoint_module(s_abs);
    rep.hom_dim = hom_space(adjoint, i_mod).dim();
    rep.end_dim = hom_space(i_mod, i_mod).dim();
    rep.structural_dim = rep.dim_s + rep.hom_dim + rep.end_dim;

    auto ideals = simple_ideals(s_abs);
    if (!ideals) return std::nullopt;
    auto iso = isotypic_split(i_mod);
    if (!iso) return std::nullopt;

    // per-ideal adjoint multiplicities in I
    std::vector<ModuleRep> ideal_modules;
    for (const auto& ideal : *ideals)
        ideal_modules.push_back(
            module_from_ideal(s_abs, Subspace::full(s_abs.dim()), ideal));
    for (const auto& mod : ideal_modules)
        rep.adjoint_multiplicity.push_back(hom_space(mod, i_mod).dim());

    // ideal classes: grouped by dimension, in order of first occurrence.
    // Within this catalog equal-dimensional simple rational forms coincide,
    // so dimension is the class key.
    std::vector<std::size_t> class_dim;
    std::vector<std::size_t> class_first;
    for (std::size_t j = 0; j < ideals->size(); ++j) {
        std::size_t dim_j = (*ideals)[j].dim();
        bool found = false;
        for (std::size_t i = 0; i < class_dim.size(); ++i)
            if (class_dim[i] == dim_j) {
                ++rep.n[i];
                found = true;
                break;
            }
        if (!found) {
            class_dim.push_back(dim_j);
            class_first.push_back(j);
            rep.n.push_back(1);
        }
    }
    rep.r = class_dim.size();
    for (std::size_t i = 0; i < rep.r; ++i)
        rep.m.push_back(rep.adjoint_multiplicity[class_first[i]]);

    std::size_t middle = 0;
    for (std::size_t i = 0; i < rep.r; ++i) middle += rep.n[i] * rep.m[i];

    // isotypic classes of I not matched by any ideal
    std::size_t squares = 0;
    for (const auto& comp : iso->components) {
        squares += comp.multiplicity * comp.multiplicity;
        ModuleRep comp_mod = submodule_on(i_mod, comp.space);
        bool matched = false;
        for (const auto& mod : ideal_modules)
            if (hom_space(mod, comp_mod).dim() > 0) {
                matched = true;
                break;
            }
        if (!matched) {
            ++rep.s;
            rep.m.push_back(comp.multiplicity);
        }
    }

    rep.formula_dim = rep.dim_s + middle + squares;
    return rep;
}

} // namespace leibniz
