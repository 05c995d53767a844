#include "leibniz/catalog.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

void set_sl2_block(LeibnizAlgebra& a, std::size_t e, std::size_t h, std::size_t f) {
    a.set_c(e, h, e, rat(2));
    a.set_c(h, e, e, rat(-2));
    a.set_c(h, f, f, rat(2));
    a.set_c(f, h, f, rat(-2));
    a.set_c(e, f, h, rat(1));
    a.set_c(f, e, h, rat(-1));
}

void require_leibniz(const LeibnizAlgebra& a, const std::string& what) {
    if (!leibniz_defects(a).empty())
        throw Error(what + ": constants violate the Leibniz identity");
}

} // namespace

LeibnizAlgebra sl2() {
    LeibnizAlgebra a(3, {"e", "h", "f"});
    set_sl2_block(a, 0, 1, 2);
    require_leibniz(a, "sl2");
    return a;
}

ModuleRep sl2_module(std::size_t m) {
    ModuleRep rep;
    rep.lie = sl2();
    rep.mdim = m + 1;
    RatMatrix rho_e(m + 1, m + 1), rho_h(m + 1, m + 1), rho_f(m + 1, m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        rho_h(i, i) = rat(static_cast<long>(m) - 2 * static_cast<long>(i));
        if (i < m) rho_f(i + 1, i) = 1;
        if (i > 0) {
            long li = static_cast<long>(i);
            rho_e(i - 1, i) = rat(-li * (static_cast<long>(m) - li + 1));
        }
    }
    rep.action = {std::move(rho_e), std::move(rho_h), std::move(rho_f)};
    require_module(rep, "sl2_module");
    return rep;
}

ModuleRep sl2_module_inconsistent(std::size_t m) {
    ModuleRep rep;
    rep.lie = sl2();
    rep.mdim = m + 1;
    RatMatrix rho_e(m + 1, m + 1), rho_h(m + 1, m + 1), rho_f(m + 1, m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        rho_h(i, i) = rat(static_cast<long>(m) - 2 * static_cast<long>(i));
        if (i < m) rho_e(i + 1, i) = rat(static_cast<long>(i));
        if (i > 0) rho_f(i - 1, i) = rat(static_cast<long>(m) - static_cast<long>(i));
    }
    rep.action = {std::move(rho_e), std::move(rho_h), std::move(rho_f)};
    return rep;
}

LeibnizAlgebra example_2_11() {
    LeibnizAlgebra a(10, {"e1", "h1", "f1", "e2", "h2", "f2", "x1", "x2", "x3", "x4"});
    set_sl2_block(a, 0, 1, 2);
    set_sl2_block(a, 3, 4, 5);

    // action of the first copy: (x1,x2) and (x3,x4) are weight pairs
    a.set_c(6, 2, 7, rat(1));  // [x1,f1] = x2
    a.set_c(6, 1, 6, rat(1));  // [x1,h1] = x1
    a.set_c(7, 0, 6, rat(-1)); // [x2,e1] = -x1
    a.set_c(7, 1, 7, rat(-1)); // [x2,h1] = -x2
    a.set_c(8, 2, 9, rat(1));  // [x3,f1] = x4
    a.set_c(8, 1, 8, rat(1));  // [x3,h1] = x3
    a.set_c(9, 0, 8, rat(-1)); // [x4,e1] = -x3
    a.set_c(9, 1, 9, rat(-1)); // [x4,h1] = -x4

    // action of the second copy: (x1,x3) and (x2,x4) are weight pairs
    a.set_c(6, 5, 8, rat(1));  // [x1,f2] = x3
    a.set_c(6, 4, 6, rat(1));  // [x1,h2] = x1
    a.set_c(8, 3, 6, rat(-1)); // [x3,e2] = -x1
    a.set_c(8, 4, 8, rat(-1)); // [x3,h2] = -x3
    a.set_c(7, 5, 9, rat(1));  // [x2,f2] = x4
    a.set_c(7, 4, 7, rat(1));  // [x2,h2] = x2
    a.set_c(9, 3, 7, rat(-1)); // [x4,e2] = -x2
    a.set_c(9, 4, 9, rat(-1)); // [x4,h2] = -x4

    require_leibniz(a, "example_2_11");
    return a;
}

LeibnizAlgebra semidirect(const LeibnizAlgebra& s, const ModuleRep& m,
                          const std::vector<std::string>& module_labels) {
    if (m.lie != s) throw AlgebraMismatch("semidirect: module is not over the given algebra");
    if (!is_lie(s)) throw NotLie("semidirect: first factor must be a Lie algebra");
    require_module(m, "semidirect");

    const std::size_t g = s.dim(), k = m.mdim;
    std::vector<std::string> labels = s.labels();
    if (!module_labels.empty()) {
        if (module_labels.size() != k)
            throw DimensionMismatch("semidirect: wrong number of module labels");
        labels.insert(labels.end(), module_labels.begin(), module_labels.end());
    } else {
        for (std::size_t b = 0; b < k; ++b) labels.push_back("v" + std::to_string(b));
    }

    LeibnizAlgebra out(g + k, labels);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t t = 0; t < g; ++t)
                if (s.c(i, j, t) != 0) out.set_c(i, j, t, s.c(i, j, t));
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t a = 0; a < k; ++a)
                if (m.action[j](a, b) != 0) out.set_c(g + b, j, g + a, m.action[j](a, b));

    require_leibniz(out, "semidirect");
    return out;
}

LeibnizAlgebra example_3_6(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw Error("example_3_6 requires m, n >= 1");
    ModuleRep tensor = tensor_module(sl2_module(m), sl2_module(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            labels.push_back("x" + std::to_string(i) + "y" + std::to_string(j));
    return semidirect(tensor.lie, tensor, labels);
}

LeibnizAlgebra sl3() {
    // explicit 3x3 representatives
    auto unit = [](std::size_t r, std::size_t c) {
        RatMatrix u(3, 3);
        u(r, c) = 1;
        return u;
    };
    std::vector<RatMatrix> basis;
    basis.push_back(unit(0, 1)); // E12
    basis.push_back(unit(0, 2)); // E13
    basis.push_back(unit(1, 0)); // E21
    basis.push_back(unit(1, 2)); // E23
    basis.push_back(unit(2, 0)); // E31
    basis.push_back(unit(2, 1)); // E32
    RatMatrix h1(3, 3), h2(3, 3);
    h1(0, 0) = 1;
    h1(1, 1) = -1;
    h2(1, 1) = 1;
    h2(2, 2) = -1;
    basis.push_back(h1);
    basis.push_back(h2);

    auto coords = [](const RatMatrix& x) {
        RatVector c(8);
        c[0] = x(0, 1);
        c[1] = x(0, 2);
        c[2] = x(1, 0);
        c[3] = x(1, 2);
        c[4] = x(2, 0);
        c[5] = x(2, 1);
        c[6] = x(0, 0);
        c[7] = -x(2, 2);
        return c;
    };

    std::vector<std::string> labels = {"E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"};
    LeibnizAlgebra a(8, labels);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            RatVector c = coords(basis[i] * basis[j] - basis[j] * basis[i]);
            for (std::size_t k = 0; k < 8; ++k)
                if (c[k] != 0) a.set_c(i, j, k, c[k]);
        }
    require_leibniz(a, "sl3");
    return a;
}

ModuleRep sl3_standard() {
    auto unit = [](std::size_t r, std::size_t c) {
        RatMatrix u(3, 3);
        u(r, c) = 1;
        return u;
    };
    std::vector<RatMatrix> basis;
    basis.push_back(unit(0, 1));
    basis.push_back(unit(0, 2));
    basis.push_back(unit(1, 0));
    basis.push_back(unit(1, 2));
    basis.push_back(unit(2, 0));
    basis.push_back(unit(2, 1));
    RatMatrix h1(3, 3), h2(3, 3);
    h1(0, 0) = 1;
    h1(1, 1) = -1;
    h2(1, 1) = 1;
    h2(2, 2) = -1;
    basis.push_back(h1);
    basis.push_back(h2);

    ModuleRep rep;
    rep.lie = sl3();
    rep.mdim = 3;
    for (const auto& b : basis) rep.action.push_back(b.transpose());
    require_module(rep, "sl3_standard");
    return rep;
}

RatMatrix sl3_transpose() {
    // E12->-E21, E13->-E31, E21->-E12, E23->-E32, E31->-E13, E32->-E23,
    // H1->-H1, H2->-H2
    RatMatrix sigma(8, 8);
    sigma(2, 0) = -1;
    sigma(4, 1) = -1;
    sigma(0, 2) = -1;
    sigma(5, 3) = -1;
    sigma(1, 4) = -1;
    sigma(3, 5) = -1;
    sigma(6, 6) = -1;
    sigma(7, 7) = -1;
    return sigma;
}

LeibnizAlgebra multi_copy(const LeibnizAlgebra& l, std::size_t m) {
    if (m < 1) throw Error("multi_copy requires at least one copy");
    if (m == 1) return l;
    const std::size_t n = l.dim();
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < m; ++t)
        for (const auto& lab : l.labels()) labels.push_back(lab + "@" + std::to_string(t + 1));
    LeibnizAlgebra out(m * n, labels);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (l.c(i, j, k) != 0)
                        out.set_c(t * n + i, t * n + j, t * n + k, l.c(i, j, k));
    require_leibniz(out, "multi_copy");
    return out;
}

} // namespace leibniz
