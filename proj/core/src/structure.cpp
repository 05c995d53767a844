#include "leibniz/structure.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

RatVector embed_rows(const RatVector& coords, const Subspace& space) {
    RatVector out(space.ambient_dim());
    for (std::size_t t = 0; t < coords.size(); ++t)
        if (coords[t] != 0)
            for (std::size_t j = 0; j < space.ambient_dim(); ++j)
                if (space.basis()(t, j) != 0) out[j] += coords[t] * space.basis()(t, j);
    return out;
}

Subspace embed_subspace(const Subspace& inner, const Subspace& outer) {
    std::vector<RatVector> rows;
    for (std::size_t t = 0; t < inner.dim(); ++t)
        rows.push_back(embed_rows(inner.basis_row(t), outer));
    return Subspace::span_of_rows(outer.ambient_dim(), rows);
}

} // namespace

LeviDecomposition levi_lift(const LeibnizAlgebra& l) {
    if (!is_semisimple_liezation(l))
        throw Error("levi_lift requires a semisimple liezation");

    IdealSubspace ideal = squares_ideal(l);
    Liezation lz = liezation(l);
    const std::size_t n = l.dim();
    const std::size_t g = lz.algebra.dim();
    const std::size_t k = ideal.space.dim();

    // section of the quotient map: quotient basis -> complement vectors
    auto section_of = [&](const RatVector& gcoords) {
        RatVector out(n);
        for (std::size_t t = 0; t < g; ++t) out[lz.complement[t]] = gcoords[t];
        return out;
    };

    RatMatrix section(n, g);
    if (k == 0) {
        for (std::size_t t = 0; t < g; ++t) section(lz.complement[t], t) = 1;
    } else {
        // action of each section vector on I, in I's basis
        std::vector<RatMatrix> act(g, RatMatrix(k, k));
        for (std::size_t b = 0; b < g; ++b) {
            RatMatrix rm = right_mult(l, unit_vector(n, lz.complement[b]));
            for (std::size_t c = 0; c < k; ++c) {
                auto coords = ideal.space.coordinates(rm * ideal.space.basis_row(c));
                if (!coords) throw IdealViolation("levi_lift: squares ideal not invariant");
                for (std::size_t r = 0; r < k; ++r) act[b](r, c) = (*coords)[r];
            }
        }

        // linear system for the correction t (k x g unknowns, row-major)
        RatMatrix sys(g * g * k, k * g);
        RatVector rhs(g * g * k);
        std::size_t row = 0;
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t b = 0; b < g; ++b) {
                RatVector gamma = lz.algebra.basis_bracket(a, b);
                RatVector defect =
                    bracket_vec(l, unit_vector(n, lz.complement[a]),
                                unit_vector(n, lz.complement[b])) -
                    section_of(gamma);
                auto dcoords = ideal.space.coordinates(defect);
                if (!dcoords) throw IdealViolation("levi_lift: defect escapes the squares ideal");
                for (std::size_t r = 0; r < k; ++r) {
                    for (std::size_t t = 0; t < g; ++t)
                        if (gamma[t] != 0) sys(row, r * g + t) += gamma[t];
                    for (std::size_t rp = 0; rp < k; ++rp)
                        if (act[b](r, rp) != 0) sys(row, rp * g + a) -= act[b](r, rp);
                    rhs[row] = (*dcoords)[r];
                    ++row;
                }
            }

        auto tau = solve(sys, rhs);
        if (!tau)
            throw Error("levi_lift: correction system unsolvable (input not semisimple?)");

        for (std::size_t t = 0; t < g; ++t) {
            RatVector lifted(n);
            lifted[lz.complement[t]] = 1;
            RatVector icoords(k);
            for (std::size_t r = 0; r < k; ++r) icoords[r] = (*tau)[r * g + t];
            lifted = lifted + embed_rows(icoords, ideal.space);
            for (std::size_t j = 0; j < n; ++j) section(j, t) = lifted[j];
        }
    }

    LeviDecomposition levi;
    levi.ideal = std::move(ideal);
    levi.section = section;
    std::vector<RatVector> srows;
    for (std::size_t t = 0; t < g; ++t) srows.push_back(section.col(t));
    levi.s_part = Subspace::span_of_rows(n, srows);

    // postconditions, exact
    if (levi.s_part.dim() != g || levi.s_part.dim() + levi.ideal.space.dim() != n)
        throw Error("levi_lift: lifted subalgebra has wrong dimension");
    if (subspace_intersect(levi.s_part, levi.ideal.space).dim() != 0)
        throw Error("levi_lift: lifted subalgebra meets the squares ideal");
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            if (!levi.s_part.contains(
                    bracket_vec(l, levi.s_part.basis_row(a), levi.s_part.basis_row(b))))
                throw Error("levi_lift: lifted subalgebra not closed under bracket");
    return levi;
}

LeibnizAlgebra levi_subalgebra(const LeibnizAlgebra& l, const LeviDecomposition& levi) {
    return subalgebra_on(l, levi.s_part);
}

ModuleRep levi_module(const LeibnizAlgebra& l, const LeviDecomposition& levi) {
    return module_from_ideal(l, levi.s_part, levi.ideal.space);
}

std::optional<std::vector<Subspace>> simple_ideals(const LeibnizAlgebra& s_lie) {
    const std::size_t g = s_lie.dim();
    if (g == 0) return std::vector<Subspace>{};

    // End of the adjoint module is spanned by the projections onto the
    // simple ideals, so a separating generic element splits them off.
    ModuleRep adj = adjoint_module(s_lie);
    HomSpace end = hom_space(adj, adj);
    const std::size_t d = end.dim();

    const std::size_t attempts = std::max<std::size_t>(5, d);
    for (std::size_t s = 0; s < attempts; ++s) {
        RatMatrix generic(g, g);
        for (std::size_t k = 0; k < d; ++k) {
            Rational w = 1;
            for (std::size_t e = 0; e <= s; ++e) w *= Rational(static_cast<long>(k + 1));
            generic = generic + w * end.basis[k];
        }
        auto pairs = rational_eigensplit(generic);
        if (!pairs || pairs->size() != d) continue;

        std::vector<Subspace> ideals;
        for (auto& p : *pairs) ideals.push_back(std::move(p.space));
        std::sort(ideals.begin(), ideals.end(), [](const Subspace& a, const Subspace& b) {
            return a.pivots().front() < b.pivots().front();
        });
        for (const auto& ideal : ideals)
            for (std::size_t t = 0; t < ideal.dim(); ++t)
                for (std::size_t j = 0; j < g; ++j)
                    if (!ideal.contains(
                            bracket_vec(s_lie, ideal.basis_row(t), unit_vector(g, j))))
                        throw Error("simple_ideals: eigenspace is not an ideal");
        return ideals;
    }
    return std::nullopt;
}

std::optional<StructureGraph> structure_graph(const LeibnizAlgebra& l,
                                              const LeviDecomposition& levi) {
    LeibnizAlgebra s_abs = levi_subalgebra(l, levi);
    ModuleRep i_mod = levi_module(l, levi);

    auto ideals_abs = simple_ideals(s_abs);
    if (!ideals_abs) return std::nullopt;
    auto iso = isotypic_split(i_mod);
    if (!iso) return std::nullopt;

    StructureGraph graph;
    for (const auto& ideal : *ideals_abs) graph.nodes.push_back(embed_subspace(ideal, levi.s_part));
    std::sort(graph.nodes.begin(), graph.nodes.end(), [](const Subspace& a, const Subspace& b) {
        return a.pivots().front() < b.pivots().front();
    });

    for (const auto& comp : iso->components) {
        GraphComponent gc;
        gc.space = embed_subspace(comp.space, levi.ideal.space);
        gc.multiplicity = comp.multiplicity;
        gc.irreducible_dim = comp.irreducible_dim;
        graph.components.push_back(std::move(gc));
    }
    std::sort(graph.components.begin(), graph.components.end(),
              [](const GraphComponent& a, const GraphComponent& b) {
                  return a.space.pivots().front() < b.space.pivots().front();
              });

    for (std::size_t c = 0; c < graph.components.size(); ++c) {
        auto& comp = graph.components[c];
        bool any_action = false;
        for (std::size_t t = 0; t < graph.nodes.size(); ++t) {
            const Subspace& node = graph.nodes[t];
            bool acts = false;
            for (std::size_t w = 0; !acts && w < comp.space.dim(); ++w)
                for (std::size_t s = 0; !acts && s < node.dim(); ++s)
                    if (!is_zero(bracket_vec(l, comp.space.basis_row(w), node.basis_row(s))))
                        acts = true;
            if (acts) {
                any_action = true;
                graph.edges.emplace_back(c, t);
            }
        }
        comp.trivial_action = !any_action;
    }
    // drop edges of trivial components (there are none by construction,
    // but keep the contract explicit)
    return graph;
}

std::optional<SummandDecomposition> indecomposable_summands(const LeibnizAlgebra& l) {
    LeviDecomposition levi = levi_lift(l);
    auto graph_opt = structure_graph(l, levi);
    if (!graph_opt) return std::nullopt;
    StructureGraph graph = std::move(*graph_opt);

    SummandDecomposition dec;
    for (std::size_t c = 0; c < graph.components.size(); ++c)
        if (graph.components[c].trivial_action) {
            dec.trivial_components.push_back(c);
            dec.squares_action_full = false;
        }

    // union-find over nodes and non-trivial components
    const std::size_t nn = graph.nodes.size(), nc = graph.components.size();
    std::vector<std::size_t> parent(nn + nc);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (const auto& [c, t] : graph.edges) unite(nn + c, t);

    std::vector<std::size_t> roots;
    for (std::size_t t = 0; t < nn; ++t) {
        std::size_t r = find(t);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }

    for (std::size_t r : roots) {
        Summand summand;
        summand.s_part = Subspace::zero(l.dim());
        summand.i_part = Subspace::zero(l.dim());
        std::vector<std::size_t> member_nodes, member_comps;
        for (std::size_t t = 0; t < nn; ++t)
            if (find(t) == r) {
                summand.s_part = subspace_sum(summand.s_part, graph.nodes[t]);
                member_nodes.push_back(t);
            }
        for (std::size_t c = 0; c < nc; ++c)
            if (!graph.components[c].trivial_action && find(nn + c) == r) {
                summand.i_part = subspace_sum(summand.i_part, graph.components[c].space);
                member_comps.push_back(c);
            }

        // clause checks per summand: [C, S] = C for every component, and
        // the member nodes are connected through shared components
        for (std::size_t c : member_comps) {
            const Subspace& comp = graph.components[c].space;
            std::vector<RatVector> image;
            for (std::size_t w = 0; w < comp.dim(); ++w)
                for (std::size_t s = 0; s < summand.s_part.dim(); ++s)
                    image.push_back(
                        bracket_vec(l, comp.basis_row(w), summand.s_part.basis_row(s)));
            if (Subspace::span_of_rows(l.dim(), image) != comp)
                throw Error("summand check failed: [C, S] != C for a component");
        }
        if (member_nodes.size() > 1) {
            std::vector<bool> reached(member_nodes.size(), false);
            reached[0] = true;
            bool progress = true;
            while (progress) {
                progress = false;
                for (std::size_t a = 0; a < member_nodes.size(); ++a)
                    for (std::size_t b = 0; b < member_nodes.size(); ++b) {
                        if (!reached[a] || reached[b]) continue;
                        bool adjacent = false;
                        for (std::size_t c : member_comps) {
                            bool ea = false, eb = false;
                            for (const auto& [ec, et] : graph.edges) {
                                if (ec == c && et == member_nodes[a]) ea = true;
                                if (ec == c && et == member_nodes[b]) eb = true;
                            }
                            if (ea && eb) { adjacent = true; break; }
                        }
                        if (adjacent) {
                            reached[b] = true;
                            progress = true;
                        }
                    }
            }
            for (bool ok : reached)
                if (!ok) throw Error("summand check failed: nodes not connected");
        }
        if (summand.i_part.dim() == 1)
            throw Error("summand check failed: nonzero square part of dimension 1");
        dec.summands.push_back(std::move(summand));
    }

    std::sort(dec.summands.begin(), dec.summands.end(), [](const Summand& a, const Summand& b) {
        return a.s_part.pivots().front() < b.s_part.pivots().front();
    });

    // global check that the squares ideal is reproduced by the action
    std::vector<RatVector> action_span;
    for (std::size_t w = 0; w < levi.ideal.space.dim(); ++w)
        for (std::size_t s = 0; s < levi.s_part.dim(); ++s)
            action_span.push_back(bracket_vec(l, levi.ideal.space.basis_row(w),
                                              levi.s_part.basis_row(s)));
    if (Subspace::span_of_rows(l.dim(), action_span) != levi.ideal.space)
        dec.squares_action_full = false;

    dec.graph = std::move(graph);
    return dec;
}

} // namespace leibniz
