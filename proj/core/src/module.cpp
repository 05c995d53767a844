#include "leibniz/module.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

RatMatrix ModuleRep::act(const RatVector& x) const {
    if (x.size() != lie.dim()) throw DimensionMismatch("act: element length mismatch");
    RatMatrix out(mdim, mdim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) out = out + x[i] * action[i];
    return out;
}

std::vector<ModuleViolation> module_check(const ModuleRep& m) {
    std::vector<ModuleViolation> violations;
    const std::size_t g = m.lie.dim();
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            RatMatrix lhs(m.mdim, m.mdim);
            for (std::size_t k = 0; k < g; ++k)
                if (m.lie.c(i, j, k) != 0) lhs = lhs + m.lie.c(i, j, k) * m.action[k];
            RatMatrix rhs = m.action[j] * m.action[i] - m.action[i] * m.action[j];
            if (lhs != rhs) violations.push_back({i, j, lhs - rhs});
        }
    return violations;
}

void require_module(const ModuleRep& m, const std::string& what) {
    if (!is_lie(m.lie)) throw NotLie(what + ": acting algebra is not Lie");
    if (!module_check(m).empty()) throw Error(what + ": right-module axiom violated");
}

ModuleRep module_from_ideal(const LeibnizAlgebra& l, const Subspace& s, const Subspace& i) {
    ModuleRep rep;
    rep.lie = subalgebra_on(l, s);
    if (!is_lie(rep.lie)) throw NotLie("module_from_ideal: complement is not a Lie subalgebra");
    rep.mdim = i.dim();
    rep.action.reserve(s.dim());
    for (std::size_t a = 0; a < s.dim(); ++a) {
        RatMatrix rm = right_mult(l, s.basis_row(a));
        RatMatrix act(i.dim(), i.dim());
        for (std::size_t b = 0; b < i.dim(); ++b) {
            RatVector image = rm * i.basis_row(b);
            auto coords = i.coordinates(image);
            if (!coords)
                throw NotInvariant("module_from_ideal: ideal is not invariant under the subalgebra");
            for (std::size_t k = 0; k < i.dim(); ++k) act(k, b) = (*coords)[k];
        }
        rep.action.push_back(std::move(act));
    }
    require_module(rep, "module_from_ideal");
    return rep;
}

ModuleRep adjoint_module(const LeibnizAlgebra& lie) {
    ModuleRep rep;
    rep.lie = lie;
    rep.mdim = lie.dim();
    for (std::size_t i = 0; i < lie.dim(); ++i)
        rep.action.push_back(right_mult(lie, unit_vector(lie.dim(), i)));
    return rep;
}

ModuleRep submodule_on(const ModuleRep& m, const Subspace& w) {
    ModuleRep rep;
    rep.lie = m.lie;
    rep.mdim = w.dim();
    for (std::size_t i = 0; i < m.lie.dim(); ++i) {
        RatMatrix act(w.dim(), w.dim());
        for (std::size_t b = 0; b < w.dim(); ++b) {
            auto coords = w.coordinates(m.action[i] * w.basis_row(b));
            if (!coords) throw NotInvariant("submodule_on: subspace not invariant");
            for (std::size_t a = 0; a < w.dim(); ++a) act(a, b) = (*coords)[a];
        }
        rep.action.push_back(std::move(act));
    }
    return rep;
}

ModuleRep trivial_module(const LeibnizAlgebra& lie, std::size_t mdim) {
    ModuleRep rep;
    rep.lie = lie;
    rep.mdim = mdim;
    rep.action.assign(lie.dim(), RatMatrix(mdim, mdim));
    return rep;
}

ModuleRep module_direct_sum(const ModuleRep& a, const ModuleRep& b) {
    if (a.lie != b.lie) throw AlgebraMismatch("module_direct_sum: acting algebras differ");
    ModuleRep rep;
    rep.lie = a.lie;
    rep.mdim = a.mdim + b.mdim;
    for (std::size_t i = 0; i < a.lie.dim(); ++i) {
        RatMatrix block(rep.mdim, rep.mdim);
        for (std::size_t p = 0; p < a.mdim; ++p)
            for (std::size_t q = 0; q < a.mdim; ++q) block(p, q) = a.action[i](p, q);
        for (std::size_t p = 0; p < b.mdim; ++p)
            for (std::size_t q = 0; q < b.mdim; ++q)
                block(a.mdim + p, a.mdim + q) = b.action[i](p, q);
        rep.action.push_back(std::move(block));
    }
    return rep;
}

HomSpace hom_space(const ModuleRep& m, const ModuleRep& n) {
    if (m.lie != n.lie) throw AlgebraMismatch("hom_space: acting algebras differ");
    const std::size_t g = m.lie.dim();
    const std::size_t rows_f = n.mdim, cols_f = m.mdim;
    const std::size_t width = rows_f * cols_f;

    // f rho_M(x) = rho_N(x) f, unknown f vectorized row-major
    RowEliminator elim(width);
    RatVector row(width);
    for (std::size_t i = 0; i < g; ++i) {
        const RatMatrix& rm = m.action[i];
        const RatMatrix& rn = n.action[i];
        for (std::size_t p = 0; p < rows_f; ++p)
            for (std::size_t q = 0; q < cols_f; ++q) {
                std::fill(row.begin(), row.end(), Rational(0));
                bool nonzero = false;
                for (std::size_t t = 0; t < cols_f; ++t)
                    if (rm(t, q) != 0) {
                        row[p * cols_f + t] += rm(t, q);
                        nonzero = true;
                    }
                for (std::size_t t = 0; t < rows_f; ++t)
                    if (rn(p, t) != 0) {
                        row[t * cols_f + q] -= rn(p, t);
                        nonzero = true;
                    }
                if (nonzero) elim.add_row(row);
            }
    }

    // the kernel of the assembled system is the hom space
    Subspace ker = kernel_basis(elim.rref_rows());
    HomSpace hs;
    for (std::size_t t = 0; t < ker.dim(); ++t)
        hs.basis.push_back(RatMatrix::unvec(ker.basis_row(t), rows_f, cols_f));
    return hs;
}

std::size_t end_dim(const ModuleRep& m) { return hom_space(m, m).dim(); }

bool is_irreducible(const ModuleRep& m) { return m.mdim >= 1 && end_dim(m) == 1; }

std::optional<IsotypicDecomposition> isotypic_split(const ModuleRep& m) {
    IsotypicDecomposition dec;
    if (m.mdim == 0) return dec;

    HomSpace end = hom_space(m, m);
    const std::size_t d = end.dim();
    if (d == 0) throw Error("isotypic_split: endomorphism algebra is zero");

    auto restricted_end_dim = [&](const Subspace& w) -> std::size_t {
        // dimension of End(M) restricted to the invariant subspace w
        RowEliminator elim(w.dim() * w.dim());
        for (const auto& e : end.basis) {
            RatVector flat(w.dim() * w.dim());
            for (std::size_t b = 0; b < w.dim(); ++b) {
                RatVector image = e * w.basis_row(b);
                auto coords = w.coordinates(image);
                if (!coords) throw Error("isotypic_split: eigenspace not End-invariant");
                for (std::size_t a = 0; a < w.dim(); ++a) flat[a * w.dim() + b] = (*coords)[a];
            }
            elim.add_row(flat);
        }
        return elim.rank();
    };

    if (d == 1) {
        IsotypicComponent comp;
        comp.space = Subspace::full(m.mdim);
        comp.multiplicity = 1;
        comp.irreducible_dim = m.mdim;
        dec.components.push_back(std::move(comp));
        return dec;
    }

    // center of End(M)
    const std::size_t width = d;
    RatMatrix sys(d * m.mdim * m.mdim, width);
    std::size_t row = 0;
    for (std::size_t u = 0; u < d; ++u) {
        std::vector<RatMatrix> comms;
        comms.reserve(d);
        for (std::size_t t = 0; t < d; ++t)
            comms.push_back(end.basis[t] * end.basis[u] - end.basis[u] * end.basis[t]);
        for (std::size_t p = 0; p < m.mdim; ++p)
            for (std::size_t q = 0; q < m.mdim; ++q) {
                for (std::size_t t = 0; t < d; ++t) sys(row, t) = comms[t](p, q);
                ++row;
            }
    }
    Subspace center_coeffs = kernel_basis(sys);
    std::vector<RatMatrix> center;
    for (std::size_t t = 0; t < center_coeffs.dim(); ++t) {
        RatMatrix z(m.mdim, m.mdim);
        RatVector coeffs = center_coeffs.basis_row(t);
        for (std::size_t u = 0; u < d; ++u)
            if (coeffs[u] != 0) z = z + coeffs[u] * end.basis[u];
        center.push_back(std::move(z));
    }

    // deterministic generic central element; the weight schedule (k+1)^(s+1)
    // guarantees a separating combination within dim-of-center attempts
    const std::size_t attempts = std::max<std::size_t>(5, center.size());
    for (std::size_t s = 0; s < attempts; ++s) {
        RatMatrix generic(m.mdim, m.mdim);
        for (std::size_t k = 0; k < center.size(); ++k) {
            Rational w = 1;
            for (std::size_t e = 0; e <= s; ++e) w *= Rational(static_cast<long>(k + 1));
            generic = generic + w * center[k];
        }
        auto pairs = rational_eigensplit(generic);
        if (!pairs) continue;

        dec.components.clear();
        std::size_t end_total = 0;
        bool ok = true;
        for (const auto& pair : *pairs) {
            // a coarse split (two types sharing an eigenvalue) shows up as a
            // non-square restricted End dimension or a total below dim End
            std::size_t rd = restricted_end_dim(pair.space);
            std::size_t mult = 0;
            while ((mult + 1) * (mult + 1) <= rd) ++mult;
            if (mult == 0 || mult * mult != rd || pair.space.dim() % mult != 0) {
                ok = false;
                break;
            }
            IsotypicComponent comp;
            comp.space = pair.space;
            comp.multiplicity = mult;
            comp.irreducible_dim = pair.space.dim() / mult;
            end_total += rd;
            dec.components.push_back(std::move(comp));
        }
        if (!ok || end_total != d) continue;
        std::sort(dec.components.begin(), dec.components.end(),
                  [](const IsotypicComponent& a, const IsotypicComponent& b) {
                      return a.space.pivots().front() < b.space.pivots().front();
                  });
        return dec;
    }
    return std::nullopt;
}

ModuleRep tensor_module(const ModuleRep& m1, const ModuleRep& m2) {
    ModuleRep rep;
    rep.lie = direct_sum(m1.lie, m2.lie);
    rep.mdim = m1.mdim * m2.mdim;
    RatMatrix id1 = RatMatrix::identity(m1.mdim);
    RatMatrix id2 = RatMatrix::identity(m2.mdim);
    for (std::size_t i = 0; i < m1.lie.dim(); ++i)
        rep.action.push_back(kronecker(m1.action[i], id2));
    for (std::size_t j = 0; j < m2.lie.dim(); ++j)
        rep.action.push_back(kronecker(id1, m2.action[j]));
    require_module(rep, "tensor_module");
    return rep;
}

ModuleRep twist_module(const ModuleRep& m, const RatMatrix& sigma) {
    if (!is_algebra_automorphism(m.lie, sigma))
        throw NotAutomorphism("twist_module: sigma is not an automorphism of the acting algebra");
    ModuleRep rep;
    rep.lie = m.lie;
    rep.mdim = m.mdim;
    for (std::size_t i = 0; i < m.lie.dim(); ++i) rep.action.push_back(m.act(sigma.col(i)));
    return rep;
}

bool modules_isomorphic(const ModuleRep& m, const ModuleRep& n) {
    if (m.lie != n.lie) throw AlgebraMismatch("modules_isomorphic: acting algebras differ");
    if (m.mdim != n.mdim) return false;
    std::size_t h = hom_space(m, n).dim();
    return h == end_dim(m) && h == end_dim(n);
}

} // namespace leibniz
