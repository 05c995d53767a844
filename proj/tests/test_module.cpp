#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/module.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

// inner automorphisms are exponentials of nilpotent adjoints; small local
// helper so this suite does not pull in the automorphism header
RatMatrix exp_of(const RatMatrix& n) {
    RatMatrix sum = RatMatrix::identity(n.rows());
    RatMatrix power = RatMatrix::identity(n.rows());
    Rational fact = 1;
    for (std::size_t p = 1; p <= n.rows(); ++p) {
        power = power * n;
        if (power.is_zero()) break;
        fact *= Rational(static_cast<long>(p));
        sum = sum + rat(1, 1) / fact * power;
    }
    return sum;
}

} // namespace

TEST_CASE("module_check: catalog modules clean, zero action clean") {
    for (std::size_t m = 0; m <= 4; ++m) CHECK(module_check(sl2_module(m)).empty());
    CHECK(module_check(trivial_module(sl2(), 3)).empty());
}

TEST_CASE("module_check: the mismatched ladder family fails on the e/h pair") {
    auto violations = module_check(sl2_module_inconsistent(2));
    REQUIRE_FALSE(violations.empty());
    bool eh_pair = false;
    for (const auto& v : violations)
        if ((v.i == 0 && v.j == 1) || (v.i == 1 && v.j == 0)) eh_pair = true;
    CHECK(eh_pair);
    CHECK(module_check(sl2_module_inconsistent(0)).empty()); // 1-dim: nothing to break
}

TEST_CASE("module_from_ideal: the fixture ideal is a 4-dim irreducible module") {
    LeibnizAlgebra l = example_2_11();
    Subspace s = Subspace::span_of_rows(
        10, {unit_vector(10, 0), unit_vector(10, 1), unit_vector(10, 2), unit_vector(10, 3),
             unit_vector(10, 4), unit_vector(10, 5)});
    Subspace ideal = squares_ideal(l).space;
    ModuleRep rep = module_from_ideal(l, s, ideal);
    CHECK(rep.lie.dim() == 6);
    CHECK(rep.mdim == 4);
    CHECK(module_check(rep).empty());
    CHECK(is_irreducible(rep));
}

TEST_CASE("module_from_ideal: Lie input gives the zero module") {
    LeibnizAlgebra l = sl2();
    ModuleRep rep = module_from_ideal(l, Subspace::full(3), squares_ideal(l).space);
    CHECK(rep.mdim == 0);
}

TEST_CASE("module_from_ideal: semidirect recovers the action, rho(h) = diag(2,0,-2)") {
    LeibnizAlgebra l = semidirect(sl2(), sl2_module(2));
    Subspace s = Subspace::span_of_rows(
        6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)});
    ModuleRep rep = module_from_ideal(l, s, squares_ideal(l).space);
    CHECK(rep.action[1] == RatMatrix::diagonal({rat(2), rat(0), rat(-2)}));
}

TEST_CASE("module_from_ideal rejects non-invariant subspaces") {
    LeibnizAlgebra l = example_2_11();
    Subspace s = Subspace::span_of_rows(
        10, {unit_vector(10, 0), unit_vector(10, 1), unit_vector(10, 2), unit_vector(10, 3),
             unit_vector(10, 4), unit_vector(10, 5)});
    Subspace not_invariant = Subspace::span_of_rows(10, {unit_vector(10, 6)});
    CHECK_THROWS_AS(module_from_ideal(l, s, not_invariant), NotInvariant);
}

TEST_CASE("hom spaces: Schur cases") {
    CHECK(hom_space(sl2_module(1), sl2_module(1)).dim() == 1); // scalars only
    CHECK(hom_space(sl2_module(1), sl2_module(2)).dim() == 0); // non-isomorphic

    // hom(2 V(1), 3 V(1)) has dimension 2*3
    ModuleRep two = module_direct_sum(sl2_module(1), sl2_module(1));
    ModuleRep three = module_direct_sum(two, sl2_module(1));
    CHECK(hom_space(two, three).dim() == 6);
}

TEST_CASE("hom space basis members intertwine exactly") {
    ModuleRep m = module_direct_sum(sl2_module(1), sl2_module(2));
    HomSpace hs = hom_space(m, m);
    CHECK(hs.dim() == 2);
    for (const auto& f : hs.basis)
        for (std::size_t x = 0; x < 3; ++x)
            CHECK(f * m.action[x] == m.action[x] * f);
}

TEST_CASE("hom dimension is the multiplicity pairing sum") {
    // hom(V(1) + V(2), 2 V(1)) = 1*2 + 0 = 2
    ModuleRep left = module_direct_sum(sl2_module(1), sl2_module(2));
    ModuleRep right = module_direct_sum(sl2_module(1), sl2_module(1));
    CHECK(hom_space(left, right).dim() == 2);
    CHECK(hom_space(right, left).dim() == 2);
}

TEST_CASE("end_dim and irreducibility") {
    CHECK(is_irreducible(sl2_module(3)));
    ModuleRep two = module_direct_sum(sl2_module(1), sl2_module(1));
    CHECK(end_dim(two) == 4);
    CHECK_FALSE(is_irreducible(two));
    CHECK_FALSE(is_irreducible(trivial_module(sl2(), 0))); // zero module
}

TEST_CASE("isotypic split: V(1) + V(2) gives two components") {
    ModuleRep m = module_direct_sum(sl2_module(1), sl2_module(2));
    auto dec = isotypic_split(m);
    REQUIRE(dec);
    REQUIRE(dec->components.size() == 2);
    CHECK(dec->components[0].space.dim() == 2);
    CHECK(dec->components[0].multiplicity == 1);
    CHECK(dec->components[0].irreducible_dim == 2);
    CHECK(dec->components[1].space.dim() == 3);
    CHECK(dec->components[1].multiplicity == 1);
    CHECK(dec->components[1].irreducible_dim == 3);
}

TEST_CASE("isotypic split: 2 V(1) is one component of multiplicity 2") {
    ModuleRep m = module_direct_sum(sl2_module(1), sl2_module(1));
    auto dec = isotypic_split(m);
    REQUIRE(dec);
    REQUIRE(dec->components.size() == 1);
    CHECK(dec->components[0].multiplicity == 2);
    CHECK(dec->components[0].irreducible_dim == 2);
}

TEST_CASE("isotypic split: irreducible module is a single component") {
    auto dec = isotypic_split(sl2_module(4));
    REQUIRE(dec);
    REQUIRE(dec->components.size() == 1);
    CHECK(dec->components[0].multiplicity == 1);
    CHECK(dec->components[0].irreducible_dim == 5);
}

TEST_CASE("isotypic components are independent, exhaustive and invariant") {
    ModuleRep m = module_direct_sum(module_direct_sum(sl2_module(1), sl2_module(1)),
                                    sl2_module(3));
    auto dec = isotypic_split(m);
    REQUIRE(dec);
    REQUIRE(dec->components.size() == 2);
    std::size_t total = 0;
    Subspace sum = Subspace::zero(m.mdim);
    for (const auto& comp : dec->components) {
        total += comp.space.dim();
        sum = subspace_sum(sum, comp.space);
        // recombining reproduces the action: every component is preserved
        for (const auto& act : m.action)
            for (std::size_t b = 0; b < comp.space.dim(); ++b)
                CHECK(comp.space.contains(act * comp.space.basis_row(b)));
    }
    CHECK(total == m.mdim);
    CHECK(sum.dim() == m.mdim);
    CHECK(subspace_intersect(dec->components[0].space, dec->components[1].space).dim() == 0);
}

TEST_CASE("isotypic split with a trivial summand yields a zero-action component") {
    ModuleRep m = module_direct_sum(sl2_module(1), sl2_module(0));
    auto dec = isotypic_split(m);
    REQUIRE(dec);
    REQUIRE(dec->components.size() == 2);
    bool found_trivial = false;
    for (const auto& comp : dec->components)
        if (comp.irreducible_dim == 1) {
            found_trivial = true;
            for (const auto& act : m.action)
                for (std::size_t b = 0; b < comp.space.dim(); ++b)
                    CHECK(is_zero(act * comp.space.basis_row(b)));
        }
    CHECK(found_trivial);
}

TEST_CASE("tensor products over the doubled algebra") {
    ModuleRep t11 = tensor_module(sl2_module(1), sl2_module(1));
    CHECK(t11.mdim == 4);
    CHECK(t11.lie.dim() == 6);
    CHECK(module_check(t11).empty());
    CHECK(is_irreducible(t11));

    ModuleRep t21 = tensor_module(sl2_module(2), sl2_module(1));
    CHECK(t21.mdim == 6);
    CHECK(end_dim(t21) == 1);
}

TEST_CASE("tensor with the one-dimensional trivial module copies the factor") {
    ModuleRep m = sl2_module(2);
    ModuleRep t = tensor_module(m, trivial_module(sl2(), 1));
    CHECK(t.mdim == m.mdim);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(t.action[i] == m.action[i]); // first factor acts as before
        CHECK(t.action[3 + i].is_zero());  // second factor acts by zero
    }
}

TEST_CASE("twist by the identity is the identity") {
    ModuleRep m = sl2_module(2);
    ModuleRep t = twist_module(m, RatMatrix::identity(3));
    for (std::size_t i = 0; i < 3; ++i) CHECK(t.action[i] == m.action[i]);
}

TEST_CASE("twist: inner twists are isomorphic, the outer sl3 twist is not") {
    LeibnizAlgebra g = sl2();
    RatMatrix sigma = exp_of(left_mult(g, unit_vector(3, 0))); // exp(ad e)
    REQUIRE(is_algebra_automorphism(g, sigma));
    ModuleRep v1 = sl2_module(1);
    ModuleRep twisted = twist_module(v1, sigma);
    CHECK(module_check(twisted).empty());
    CHECK(hom_space(v1, twisted).dim() == 1);
    CHECK(modules_isomorphic(v1, twisted));

    ModuleRep std3 = sl3_standard();
    ModuleRep tw3 = twist_module(std3, sl3_transpose());
    CHECK(module_check(tw3).empty());
    CHECK(hom_space(std3, tw3).dim() == 0);
    CHECK_FALSE(modules_isomorphic(std3, tw3));
}

TEST_CASE("twist_module rejects non-automorphisms") {
    RatMatrix bad(3, 3); // zero map
    CHECK_THROWS_AS(twist_module(sl2_module(1), bad), NotAutomorphism);
}

TEST_CASE("twist by a composition is the composition of twists") {
    LeibnizAlgebra g = sl2();
    RatMatrix s1 = exp_of(left_mult(g, unit_vector(3, 0)));
    RatMatrix s2 = exp_of(left_mult(g, unit_vector(3, 2)));
    ModuleRep m = sl2_module(2);
    ModuleRep lhs = twist_module(m, s1 * s2);
    ModuleRep rhs = twist_module(twist_module(m, s1), s2);
    for (std::size_t i = 0; i < 3; ++i) CHECK(lhs.action[i] == rhs.action[i]);
}

TEST_CASE("modules_isomorphic basics") {
    ModuleRep m = sl2_module(2);
    CHECK(modules_isomorphic(m, m));
    CHECK_FALSE(modules_isomorphic(sl2_module(1), sl2_module(2)));
    // same isotypic content in different order
    ModuleRep a = module_direct_sum(sl2_module(1), sl2_module(2));
    ModuleRep b = module_direct_sum(sl2_module(2), sl2_module(1));
    CHECK(modules_isomorphic(a, b));
    // matching total structure is required, not just some hom
    ModuleRep c = module_direct_sum(sl2_module(1), sl2_module(1));
    ModuleRep d = module_direct_sum(sl2_module(1), sl2_module(2));
    CHECK_FALSE(modules_isomorphic(c, d));
}
