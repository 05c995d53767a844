#include "leibniz/serialize.hpp"

#include <array>
#include <set>

#include <json.hpp>

#include "leibniz/errors.hpp"

namespace leibniz {

using nlohmann::json;

namespace {

json rational_entry(const Rational& r) { return rat_str(r); }

Rational parse_entry(const json& j, const char* where) {
    if (j.is_number_integer()) return rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw ParseError(std::string(where) + ": coefficient must be a string or integer");
}

json matrix_entries(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_entry(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string algebra_to_json(const LeibnizAlgebra& a,
                            const std::map<std::string, std::string>& meta) {
    json out;
    out["dim"] = a.dim();
    out["labels"] = a.labels();
    json brackets = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.c(i, j, k) != 0)
                    brackets.push_back(json::array({i, j, k, rational_entry(a.c(i, j, k))}));
    out["brackets"] = std::move(brackets);
    if (!meta.empty()) out["meta"] = meta;
    return out.dump(2) + "\n";
}

LeibnizAlgebra algebra_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!in.is_object() || !in.contains("dim") || !in.contains("labels") ||
        !in.contains("brackets"))
        throw ParseError("algebra file needs dim, labels and brackets");
    if (!in["dim"].is_number_unsigned())
        throw ParseError("dim must be a nonnegative integer");
    const std::size_t dim = in["dim"].get<std::size_t>();
    if (!in["labels"].is_array() || in["labels"].size() != dim)
        throw ParseError("labels must be an array of dim strings");
    std::vector<std::string> labels;
    for (const auto& l : in["labels"]) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        labels.push_back(l.get<std::string>());
    }

    LeibnizAlgebra a(dim, labels);
    if (!in["brackets"].is_array()) throw ParseError("brackets must be an array");
    std::set<std::array<std::size_t, 3>> seen;
    for (const auto& entry : in["brackets"]) {
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError("each bracket entry must be [i, j, k, coefficient]");
        std::size_t idx[3];
        for (int t = 0; t < 3; ++t) {
            if (!entry[t].is_number_unsigned())
                throw ParseError("bracket indices must be nonnegative integers");
            idx[t] = entry[t].get<std::size_t>();
            if (idx[t] >= dim) throw ParseError("bracket index out of range");
        }
        if (!seen.insert({idx[0], idx[1], idx[2]}).second)
            throw ParseError("duplicate bracket entry");
        a.set_c(idx[0], idx[1], idx[2], parse_entry(entry[3], "brackets"));
    }
    return a;
}

std::string matrix_to_json(const RatMatrix& m,
                           const std::map<std::string, std::string>& meta) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = matrix_entries(m);
    if (!meta.empty()) out["meta"] = meta;
    return out.dump(2) + "\n";
}

RatMatrix matrix_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!in.is_object() || !in.contains("rows") || !in.contains("cols") ||
        !in.contains("entries"))
        throw ParseError("matrix file needs rows, cols and entries");
    if (!in["rows"].is_number_unsigned() || !in["cols"].is_number_unsigned())
        throw ParseError("rows and cols must be nonnegative integers");
    const std::size_t rows = in["rows"].get<std::size_t>();
    const std::size_t cols = in["cols"].get<std::size_t>();
    if (!in["entries"].is_array() || in["entries"].size() != rows)
        throw ParseError("entries must be an array of rows");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = in["entries"][i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("entry row has wrong length");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_entry(row[j], "entries");
    }
    return m;
}

namespace {

json formula_json(const FormulaReport& f) {
    json out;
    out["brute_dim"] = f.brute_dim;
    out["dim_s"] = f.dim_s;
    out["hom_dim"] = f.hom_dim;
    out["end_dim"] = f.end_dim;
    out["structural_dim"] = f.structural_dim;
    out["formula_dim"] = f.formula_dim;
    out["r"] = f.r;
    out["s"] = f.s;
    out["n_i"] = f.n;
    out["m_i"] = f.m;
    out["adjoint_multiplicity"] = f.adjoint_multiplicity;
    return out;
}

} // namespace

std::string report_to_json(const AnalysisReport& rep) {
    json out;
    out["dim"] = rep.dim;
    out["leibniz_ok"] = rep.leibniz_ok;
    out["is_lie"] = rep.lie;
    out["dim_I"] = rep.dim_squares;
    out["semisimple"] = rep.semisimple;
    out["levi_found"] = rep.levi_found;
    if (rep.levi_found) {
        out["simple_ideal_dims"] = rep.simple_ideal_dims;
        json iso = json::array();
        for (const auto& comp : rep.isotypic) {
            json c;
            c["dim"] = comp.dim;
            c["multiplicity"] = comp.multiplicity;
            c["irreducible_dim"] = comp.irreducible_dim;
            c["trivial_action"] = comp.trivial_action;
            iso.push_back(std::move(c));
        }
        out["isotypic"] = std::move(iso);
        json edges = json::array();
        for (const auto& [c, t] : rep.graph_edges) edges.push_back(json::array({c, t}));
        out["graph_edges"] = std::move(edges);
        out["summand_count"] = rep.summand_count;
        out["prop_2_10_ok"] = rep.squares_action_full;
    }
    out["der_dim"] = rep.der_dim;
    if (rep.der_split_found) {
        json split;
        split["inner"] = rep.der_inner;
        split["s_to_i"] = rep.der_s_to_i;
        split["i_to_i"] = rep.der_i_to_i;
        out["der_split"] = std::move(split);
    }
    if (rep.formula) out["formula"] = formula_json(*rep.formula);
    out["warnings"] = rep.warnings;
    return out.dump(2) + "\n";
}

std::string derivations_to_json(const LeibnizAlgebra& a) {
    DerivationSpace ds = derivation_space(a);
    json out;
    out["der_dim"] = ds.basis.size();
    json basis = json::array();
    for (const auto& d : ds.basis) basis.push_back(matrix_entries(d));
    out["basis"] = std::move(basis);

    if (leibniz_defects(a).empty() && is_semisimple_liezation(a)) {
        LeviDecomposition levi = levi_lift(a);
        try {
            split_derivations(ds, a, levi);
            json split;
            split["inner"] = ds.inner.size();
            split["s_to_i"] = ds.s_to_i.size();
            split["i_to_i"] = ds.i_to_i.size();
            out["split"] = std::move(split);
        } catch (const SplitMismatch&) {
            // reported through the missing key
        }
        if (auto formula = formula_report(a, ds.basis.size()))
            out["formula"] = formula_json(*formula);
    }
    return out.dump(2) + "\n";
}

} // namespace leibniz
