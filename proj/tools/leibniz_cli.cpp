// Command line front end: verify / analyze / derivations / automorphisms /
// build, all speaking the JSON interchange format.
//
// Exit codes: 0 success, 1 semantic failure (defects, wrong structure),
// 2 I/O or format error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/automorphisms.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitIo = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw leibniz::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw leibniz::ParseError("cannot write '" + out_path + "'");
    out << text;
}

leibniz::LeibnizAlgebra load_algebra(const std::string& path) {
    return leibniz::algebra_from_json(read_file(path));
}

int cmd_verify(const std::string& path) {
    leibniz::LeibnizAlgebra a = load_algebra(path);
    auto defects = leibniz::leibniz_defects(a);
    if (defects.empty()) return kExitOk;
    for (const auto& d : defects) {
        std::cout << "defect at (" << d.i << "," << d.j << "," << d.k << "):";
        for (std::size_t t = 0; t < d.defect.size(); ++t)
            if (d.defect[t] != 0)
                std::cout << " " << leibniz::rat_str(d.defect[t]) << "*" << a.labels()[t];
        std::cout << "\n";
    }
    return kExitSemantic;
}

int cmd_analyze(const std::string& path, const std::string& out_path) {
    leibniz::LeibnizAlgebra a = load_algebra(path);
    leibniz::AnalysisReport rep = leibniz::analyze(a);
    write_output(leibniz::report_to_json(rep), out_path);
    return rep.leibniz_ok ? kExitOk : kExitSemantic;
}

int cmd_derivations(const std::string& path, const std::string& out_path) {
    leibniz::LeibnizAlgebra a = load_algebra(path);
    write_output(leibniz::derivations_to_json(a), out_path);
    return kExitOk;
}

nlohmann::json matrix_entries(const leibniz::RatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(leibniz::rat_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    nlohmann::json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

int cmd_automorphisms(const std::string& path, const std::string& check_path,
                      const std::string& factor_path, const std::string& extend_path,
                      const std::string& out_path) {
    leibniz::LeibnizAlgebra a = load_algebra(path);
    nlohmann::json out;

    if (!check_path.empty()) {
        leibniz::RatMatrix m = leibniz::matrix_from_json(read_file(check_path));
        out["is_automorphism"] = leibniz::is_automorphism(a, m);
        write_output(out.dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (!leibniz::leibniz_defects(a).empty()) {
        std::cerr << "input fails the defining identity\n";
        return kExitSemantic;
    }
    leibniz::LeviDecomposition levi = leibniz::levi_lift(a);

    if (!factor_path.empty()) {
        leibniz::RatMatrix phi = leibniz::matrix_from_json(read_file(factor_path));
        auto [psi, eta] = leibniz::factor_semidirect(a, levi, phi);
        out["psi"] = matrix_entries(psi);
        out["eta"] = matrix_entries(eta);
        write_output(out.dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (!extend_path.empty()) {
        leibniz::RatMatrix sigma = leibniz::matrix_from_json(read_file(extend_path));
        leibniz::ModuleRep ideal = leibniz::levi_module(a, levi);
        out["extendable"] = leibniz::extendable(sigma, ideal);
        write_output(out.dump(2) + "\n", out_path);
        return kExitOk;
    }

    std::cerr << "automorphisms: pass one of --check, --factor, --extend\n";
    return kExitIo;
}

int cmd_build(const std::string& name, unsigned m, unsigned n,
              const std::vector<unsigned>& weights, unsigned copies,
              const std::string& out_path) {
    using namespace leibniz;
    std::map<std::string, std::string> meta;
    meta["built_by"] = "leibniz build " + name;

    if (name == "sl3-transpose") {
        write_output(matrix_to_json(sl3_transpose(), meta), out_path);
        return kExitOk;
    }

    LeibnizAlgebra a;
    if (name == "sl2") {
        a = sl2();
    } else if (name == "sl3") {
        a = sl3();
    } else if (name == "example-2.11") {
        a = example_2_11();
    } else if (name == "example-3.6") {
        a = example_3_6(m, n);
    } else if (name == "sl2-semidirect") {
        // --m gives a single module weight; repeated --weight builds a sum
        std::vector<unsigned> ws = weights.empty() ? std::vector<unsigned>{m} : weights;
        ModuleRep mod = sl2_module(ws[0]);
        for (std::size_t t = 1; t < ws.size(); ++t)
            mod = module_direct_sum(mod, sl2_module(ws[t]));
        a = semidirect(mod.lie, mod);
    } else if (name == "sl3-standard") {
        ModuleRep std_mod = sl3_standard();
        a = semidirect(std_mod.lie, std_mod);
    } else {
        std::cerr << "unknown build target '" << name << "'\n";
        return kExitIo;
    }
    if (copies > 1) a = multi_copy(a, copies);
    write_output(algebra_to_json(a, meta), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure analysis of Leibniz algebras over Q"};
    app.require_subcommand(1);

    std::string file, out_path;
    std::string check_path, factor_path, extend_path;
    std::string build_name;
    unsigned m = 1, n = 1, copies = 1;
    std::vector<unsigned> weights;

    auto* verify = app.add_subcommand("verify", "check the defining identity");
    verify->add_option("file", file)->required();

    auto* analyze = app.add_subcommand("analyze", "full structural report");
    analyze->add_option("file", file)->required();
    analyze->add_option("-o,--output", out_path);

    auto* derivations = app.add_subcommand("derivations", "derivation algebra and split");
    derivations->add_option("file", file)->required();
    derivations->add_option("-o,--output", out_path);

    auto* autos = app.add_subcommand("automorphisms", "check/factor/extend automorphisms");
    autos->add_option("file", file)->required();
    autos->add_option("--check", check_path, "matrix file: automorphism membership");
    autos->add_option("--factor", factor_path, "matrix file: semidirect factorization");
    autos->add_option("--extend", extend_path, "matrix file: extendability of a Levi map");
    autos->add_option("-o,--output", out_path);

    auto* build = app.add_subcommand("build", "emit a bundled algebra or map");
    build->add_option("name", build_name)->required();
    build->add_option("--m", m);
    build->add_option("--n", n);
    build->add_option("--weight", weights, "module weights for sl2-semidirect (repeatable)");
    build->add_option("--copies", copies);
    build->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(file);
        if (analyze->parsed()) return cmd_analyze(file, out_path);
        if (derivations->parsed()) return cmd_derivations(file, out_path);
        if (autos->parsed())
            return cmd_automorphisms(file, check_path, factor_path, extend_path, out_path);
        if (build->parsed()) return cmd_build(build_name, m, n, weights, copies, out_path);
    } catch (const leibniz::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const leibniz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitIo;
}
