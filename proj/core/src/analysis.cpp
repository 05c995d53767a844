#include "leibniz/analysis.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

AnalysisReport analyze(const LeibnizAlgebra& a) {
    AnalysisReport rep;
    rep.dim = a.dim();
    rep.leibniz_ok = leibniz_defects(a).empty();
    if (!rep.leibniz_ok) {
        rep.warnings.push_back("input violates the defining identity; analysis skipped");
        return rep;
    }
    rep.lie = is_lie(a);
    rep.dim_squares = squares_ideal(a).space.dim();
    rep.semisimple = is_semisimple_liezation(a);

    DerivationSpace ds = derivation_space(a);
    rep.der_dim = ds.basis.size();

    if (!rep.semisimple) {
        rep.warnings.push_back("liezation is not semisimple; structure analysis skipped");
        return rep;
    }

    LeviDecomposition levi = levi_lift(a);
    rep.levi_found = true;

    auto summands = indecomposable_summands(a);
    if (!summands) {
        rep.warnings.push_back("a splitting is not realizable over the rationals");
    } else {
        for (const auto& node : summands->graph.nodes)
            rep.simple_ideal_dims.push_back(node.dim());
        for (const auto& comp : summands->graph.components) {
            AnalysisReport::IsotypicEntry entry;
            entry.dim = comp.space.dim();
            entry.multiplicity = comp.multiplicity;
            entry.irreducible_dim = comp.irreducible_dim;
            entry.trivial_action = comp.trivial_action;
            rep.isotypic.push_back(entry);
        }
        rep.graph_edges = summands->graph.edges;
        rep.summand_count = summands->summands.size();
        rep.squares_action_full = summands->squares_action_full;
        if (!rep.squares_action_full)
            rep.warnings.push_back(
                "squares ideal has components with trivial action: [I,S] != I");
    }

    try {
        split_derivations(ds, a, levi);
        rep.der_split_found = true;
        rep.der_inner = ds.inner.size();
        rep.der_s_to_i = ds.s_to_i.size();
        rep.der_i_to_i = ds.i_to_i.size();
    } catch (const SplitMismatch& e) {
        rep.warnings.push_back(std::string("derivation split failed: ") + e.what());
    }

    rep.formula = formula_report(a, rep.der_dim);
    if (!rep.formula)
        rep.warnings.push_back("dimension formula skipped: split not realizable over Q");

    return rep;
}

} // namespace leibniz
