#ifndef LEIBNIZ_ANALYSIS_HPP
#define LEIBNIZ_ANALYSIS_HPP

#include "leibniz/derivations.hpp"

namespace leibniz {

/// Full structural verdict for one algebra. Every numeric field is
/// reproducible bit-exactly from the input: all underlying bases are
/// canonical and all arithmetic is exact.
struct AnalysisReport {
    std::size_t dim = 0;
    bool leibniz_ok = false;
    bool lie = false;
    std::size_t dim_squares = 0;
    bool semisimple = false;
    bool levi_found = false;

    std::vector<std::size_t> simple_ideal_dims;
    struct IsotypicEntry {
        std::size_t dim = 0, multiplicity = 0, irreducible_dim = 0;
        bool trivial_action = false;
    };
    std::vector<IsotypicEntry> isotypic;
    std::vector<std::pair<std::size_t, std::size_t>> graph_edges; // (component, ideal)
    std::size_t summand_count = 0;
    bool squares_action_full = true; // [I, S] == I

    std::size_t der_dim = 0;
    bool der_split_found = false;
    std::size_t der_inner = 0, der_s_to_i = 0, der_i_to_i = 0;

    std::optional<FormulaReport> formula;

    std::vector<std::string> warnings;
};

/// Runs the whole pipeline, downgrading unavailable stages to warnings.
AnalysisReport analyze(const LeibnizAlgebra& a);

} // namespace leibniz

#endif
