#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/structure.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

// sl2 with scalars extended by a square root of -1, then viewed as a
// 6-dimensional algebra over Q: basis e,h,f,ie,ih,if. Semisimple over Q,
// but its two complex simple ideals are Galois-conjugate, so the
// simple-ideal split is not realizable over the rationals.
LeibnizAlgebra complexified_sl2() {
    LeibnizAlgebra base = sl2();
    LeibnizAlgebra a(6, {"e", "h", "f", "ie", "ih", "if"});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                const Rational& c = base.c(i, j, k);
                if (c == 0) continue;
                a.set_c(i, j, k, c);
                a.set_c(i, j + 3, k + 3, c);
                a.set_c(i + 3, j, k + 3, c);
                a.set_c(i + 3, j + 3, k, -c);
            }
    return a;
}

Subspace standard_span(std::size_t ambient, std::initializer_list<std::size_t> idx) {
    std::vector<RatVector> rows;
    for (std::size_t t : idx) rows.push_back(unit_vector(ambient, t));
    return Subspace::span_of_rows(ambient, rows);
}

} // namespace

TEST_CASE("levi_lift on an already split algebra returns the obvious complement") {
    LeibnizAlgebra l = example_2_11();
    LeviDecomposition levi = levi_lift(l);
    CHECK(levi.s_part == standard_span(10, {0, 1, 2, 3, 4, 5}));
    CHECK(levi.ideal.space == standard_span(10, {6, 7, 8, 9}));
    CHECK(levi.section == RatMatrix::from_rows({
        unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2), unit_vector(6, 3),
        unit_vector(6, 4), unit_vector(6, 5), RatVector(6), RatVector(6), RatVector(6),
        RatVector(6)}));
}

TEST_CASE("levi_lift on a Lie algebra returns the whole space") {
    LeviDecomposition levi = levi_lift(sl2());
    CHECK(levi.s_part.dim() == 3);
    CHECK(levi.ideal.space.dim() == 0);
}

TEST_CASE("levi_lift after scrambled bases: exact postconditions, every time") {
    std::mt19937 gen(41);
    LeibnizAlgebra base = example_2_11();
    for (int trial = 0; trial < 4; ++trial) {
        LeibnizAlgebra l = change_basis(base, testing::random_unimodular(gen, 10));
        LeviDecomposition levi = levi_lift(l);
        CHECK(levi.s_part.dim() == 6);
        CHECK(subspace_intersect(levi.s_part, levi.ideal.space).dim() == 0);
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b)
                CHECK(levi.s_part.contains(
                    bracket_vec(l, levi.s_part.basis_row(a), levi.s_part.basis_row(b))));
    }
}

TEST_CASE("levi_lift rejects non-semisimple input") {
    CHECK_THROWS_AS(levi_lift(LeibnizAlgebra(2, {})), Error);
}

TEST_CASE("levi_subalgebra of the fixture is the doubled sl2") {
    LeibnizAlgebra l = example_2_11();
    LeviDecomposition levi = levi_lift(l);
    CHECK(levi_subalgebra(l, levi) == direct_sum(sl2(), sl2()));
}

TEST_CASE("simple_ideals: one for simple algebras, two for the double") {
    auto one = simple_ideals(sl2());
    REQUIRE(one);
    REQUIRE(one->size() == 1);
    CHECK((*one)[0].dim() == 3);

    auto three = simple_ideals(sl3());
    REQUIRE(three);
    CHECK(three->size() == 1);

    auto two = simple_ideals(direct_sum(sl2(), sl2()));
    REQUIRE(two);
    REQUIRE(two->size() == 2);
    CHECK((*two)[0] == standard_span(6, {0, 1, 2}));
    CHECK((*two)[1] == standard_span(6, {3, 4, 5}));
}

TEST_CASE("simple_ideals are bracket-orthogonal and exhaustive") {
    LeibnizAlgebra s = direct_sum(sl2(), sl3());
    auto ideals = simple_ideals(s);
    REQUIRE(ideals);
    REQUIRE(ideals->size() == 2);
    CHECK((*ideals)[0].dim() + (*ideals)[1].dim() == 11);
    for (std::size_t a = 0; a < (*ideals)[0].dim(); ++a)
        for (std::size_t b = 0; b < (*ideals)[1].dim(); ++b)
            CHECK(is_zero(bracket_vec(s, (*ideals)[0].basis_row(a),
                                      (*ideals)[1].basis_row(b))));
}

TEST_CASE("simple_ideals reports a split that is not rational") {
    LeibnizAlgebra a = complexified_sl2();
    REQUIRE(leibniz_defects(a).empty());
    REQUIRE(is_semisimple_liezation(a));
    CHECK_FALSE(simple_ideals(a));
}

TEST_CASE("structure graph of the fixture: two nodes share the one component") {
    LeibnizAlgebra l = example_2_11();
    LeviDecomposition levi = levi_lift(l);
    auto graph = structure_graph(l, levi);
    REQUIRE(graph);
    CHECK(graph->nodes.size() == 2);
    REQUIRE(graph->components.size() == 1);
    CHECK(graph->components[0].space.dim() == 4);
    CHECK(graph->components[0].multiplicity == 1);
    CHECK_FALSE(graph->components[0].trivial_action);
    REQUIRE(graph->edges.size() == 2);
    CHECK(graph->edges[0] == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(graph->edges[1] == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("structure graph of a single semidirect block") {
    LeibnizAlgebra l = semidirect(sl2(), sl2_module(2));
    LeviDecomposition levi = levi_lift(l);
    auto graph = structure_graph(l, levi);
    REQUIRE(graph);
    CHECK(graph->nodes.size() == 1);
    CHECK(graph->components.size() == 1);
    CHECK(graph->edges.size() == 1);
}

TEST_CASE("summands: the fixture is indecomposable") {
    auto dec = indecomposable_summands(example_2_11());
    REQUIRE(dec);
    CHECK(dec->summands.size() == 1);
    CHECK(dec->squares_action_full);
    CHECK(dec->summands[0].s_part.dim() == 6);
    CHECK(dec->summands[0].i_part.dim() == 4);
}

TEST_CASE("summands: a direct sum splits along the graph") {
    LeibnizAlgebra l = direct_sum(example_2_11(), semidirect(sl2(), sl2_module(2)));
    auto dec = indecomposable_summands(l);
    REQUIRE(dec);
    REQUIRE(dec->summands.size() == 2);

    // parts are ideals with vanishing cross brackets, summing to L
    std::size_t total = 0;
    for (const auto& sm : dec->summands) total += sm.s_part.dim() + sm.i_part.dim();
    CHECK(total == l.dim());
    Subspace first = subspace_sum(dec->summands[0].s_part, dec->summands[0].i_part);
    Subspace second = subspace_sum(dec->summands[1].s_part, dec->summands[1].i_part);
    for (std::size_t a = 0; a < first.dim(); ++a)
        for (std::size_t b = 0; b < second.dim(); ++b) {
            CHECK(is_zero(bracket_vec(l, first.basis_row(a), second.basis_row(b))));
            CHECK(is_zero(bracket_vec(l, second.basis_row(b), first.basis_row(a))));
        }
}

TEST_CASE("summands: two identical blocks do not merge") {
    LeibnizAlgebra one = semidirect(sl2(), sl2_module(1));
    auto dec = indecomposable_summands(multi_copy(one, 2));
    REQUIRE(dec);
    CHECK(dec->summands.size() == 2);
    for (const auto& sm : dec->summands) {
        CHECK(sm.s_part.dim() == 3);
        CHECK(sm.i_part.dim() == 2); // nonzero square parts have dim >= 2
    }
}

TEST_CASE("summands: pure Lie input decomposes into its simple ideals") {
    auto dec = indecomposable_summands(direct_sum(sl2(), sl3()));
    REQUIRE(dec);
    REQUIRE(dec->summands.size() == 2);
    CHECK(dec->summands[0].s_part.dim() == 3);
    CHECK(dec->summands[0].i_part.dim() == 0);
    CHECK(dec->summands[1].s_part.dim() == 8);
    CHECK(dec->summands[1].i_part.dim() == 0);
    CHECK(dec->squares_action_full); // vacuous: the ideal is zero
}

TEST_CASE("summands survive a scrambled basis") {
    std::mt19937 gen(43);
    LeibnizAlgebra l =
        change_basis(direct_sum(example_2_11(), semidirect(sl2(), sl2_module(1))),
                     testing::random_unimodular(gen, 15));
    auto dec = indecomposable_summands(l);
    REQUIRE(dec);
    CHECK(dec->summands.size() == 2);
}
