#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

// label bijection between the tensor ordering x{i}y{j} (flat i*(n+1)+j)
// and the fixture ordering x1=x0y0, x2=x1y0, x3=x0y1, x4=x1y1
RatMatrix fixture_relabel() {
    RatMatrix p(10, 10);
    for (std::size_t t = 0; t < 6; ++t) p(t, t) = 1;
    p(6, 6) = 1; // x1 <- x0y0
    p(8, 7) = 1; // x3 <- x0y1
    p(7, 8) = 1; // x2 <- x1y0
    p(9, 9) = 1; // x4 <- x1y1
    return p;
}

// smallest ideal containing the given vector, built by closing under
// products with basis elements on both sides
Subspace generated_ideal(const LeibnizAlgebra& a, const RatVector& seed) {
    Subspace span = Subspace::span_of_rows(a.dim(), {seed});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RatVector> next;
        for (std::size_t t = 0; t < span.dim(); ++t)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                next.push_back(bracket_vec(a, span.basis_row(t), unit_vector(a.dim(), j)));
                next.push_back(bracket_vec(a, unit_vector(a.dim(), j), span.basis_row(t)));
            }
        for (std::size_t t = 0; t < span.dim(); ++t) next.push_back(span.basis_row(t));
        Subspace bigger = Subspace::span_of_rows(a.dim(), next);
        if (bigger.dim() > span.dim()) {
            span = bigger;
            grew = true;
        }
    }
    return span;
}

} // namespace

TEST_CASE("sl2: clean axioms, frozen Killing values, no center") {
    LeibnizAlgebra a = sl2();
    CHECK(leibniz_defects(a).empty());
    CHECK(is_lie(a));
    RatMatrix kappa = killing_form(a);
    CHECK(kappa(1, 1) == 8);
    CHECK(rank(kappa) == 3);
    CHECK(center(a).dim() == 0);
}

TEST_CASE("sl2_module: weight diagonals and ladder coefficients") {
    ModuleRep v1 = sl2_module(1);
    CHECK(v1.action[1] == RatMatrix::diagonal({rat(1), rat(-1)}));
    CHECK(v1.action[0](0, 1) == -1); // [v1, e] = -v0

    ModuleRep v0 = sl2_module(0);
    for (const auto& act : v0.action) CHECK(act.is_zero()); // 1-dim: zero action

    ModuleRep v2 = sl2_module(2);
    CHECK(v2.action[0](1, 2) == -2); // [v2, e] = -2 v1: -i(m-i+1) at i=2 is -2
}

TEST_CASE("sl2_module is irreducible up to m = 6") {
    for (std::size_t m = 0; m <= 6; ++m) CHECK(is_irreducible(sl2_module(m)));
}

TEST_CASE("the 10-dimensional fixture") {
    LeibnizAlgebra a = example_2_11();
    CHECK(a.dim() == 10);
    CHECK(squares_ideal(a).space.dim() == 4);
    CHECK_FALSE(is_lie(a));
    CHECK(is_semisimple_liezation(a));
}

TEST_CASE("semidirect of the doubled algebra matches the fixture up to relabeling") {
    ModuleRep tensor = tensor_module(sl2_module(1), sl2_module(1));
    LeibnizAlgebra built = semidirect(tensor.lie, tensor);
    CHECK(change_basis(built, fixture_relabel()) == example_2_11());
}

TEST_CASE("semidirect with the zero module returns the Lie factor") {
    LeibnizAlgebra s = sl2();
    CHECK(semidirect(s, trivial_module(s, 0)) == s);
}

TEST_CASE("semidirect(sl2, V(2)) is simple: basis vectors generate M or all") {
    LeibnizAlgebra a = semidirect(sl2(), sl2_module(2));
    CHECK(a.dim() == 6);
    Subspace module_part = Subspace::span_of_rows(
        6, {unit_vector(6, 3), unit_vector(6, 4), unit_vector(6, 5)});
    for (std::size_t t = 0; t < 6; ++t) {
        Subspace ideal = generated_ideal(a, unit_vector(6, t));
        if (t < 3)
            CHECK(ideal.dim() == 6); // Lie generators reach everything
        else
            CHECK(ideal == module_part); // module generators close inside M
    }
}

TEST_CASE("example_3_6 dimensions and the (1,1) cross-check") {
    CHECK(example_3_6(1, 1).dim() == 10);
    CHECK(change_basis(example_3_6(1, 1), fixture_relabel()) == example_2_11());

    LeibnizAlgebra a = example_3_6(2, 1);
    CHECK(a.dim() == 12);
    Subspace s = Subspace::span_of_rows(
        12, {unit_vector(12, 0), unit_vector(12, 1), unit_vector(12, 2), unit_vector(12, 3),
             unit_vector(12, 4), unit_vector(12, 5)});
    ModuleRep ideal = module_from_ideal(a, s, squares_ideal(a).space);
    CHECK(ideal.mdim == 6);
    CHECK(is_irreducible(ideal));
}

TEST_CASE("example_3_6 rejects degenerate parameters") {
    CHECK_THROWS_AS(example_3_6(0, 1), Error);
}

TEST_CASE("sl3 and its standard module") {
    LeibnizAlgebra g = sl3();
    CHECK(g.dim() == 8);
    CHECK(is_lie(g));
    CHECK(rank(killing_form(g)) == 8);

    ModuleRep std3 = sl3_standard();
    CHECK(module_check(std3).empty());
    CHECK(is_irreducible(std3));

    RatMatrix sigma = sl3_transpose();
    CHECK(is_algebra_automorphism(g, sigma));
    CHECK(hom_space(std3, twist_module(std3, sigma)).dim() == 0);
}

TEST_CASE("sl3 bracket spot checks against matrix commutators") {
    LeibnizAlgebra g = sl3();
    // [E12, E21] = H1, [E12, E23] = E13, [H1, E12] = 2 E12
    CHECK(g.basis_bracket(0, 2) == unit_vector(8, 6));
    CHECK(g.basis_bracket(0, 3) == unit_vector(8, 1));
    CHECK(g.basis_bracket(6, 0) == rat(2) * unit_vector(8, 0));
}

TEST_CASE("multi_copy: identity case, dimensions, derivation additivity") {
    LeibnizAlgebra one = semidirect(sl2(), sl2_module(1));
    CHECK(multi_copy(one, 1) == one);

    LeibnizAlgebra two = multi_copy(one, 2);
    CHECK(two.dim() == 10);
    CHECK(leibniz_defects(two).empty());

    std::size_t der_one = derivation_space(one).basis.size();
    std::size_t der_two = derivation_space(two).basis.size();
    CHECK(der_two == 2 * der_one);
}
