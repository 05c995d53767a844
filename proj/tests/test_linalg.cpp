#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/linalg.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

RatMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<RatVector> rs;
    for (const auto& row : rows) {
        RatVector r;
        for (long v : row) r.push_back(rat(v));
        rs.push_back(std::move(r));
    }
    return RatMatrix::from_rows(rs);
}

RatVector vec(const std::vector<long>& entries) {
    RatVector v;
    for (long e : entries) v.push_back(rat(e));
    return v;
}

} // namespace

TEST_CASE("rref: proportional rows collapse") {
    auto [r, rk] = rref(mat({{2, 4}, {1, 2}}));
    CHECK(rk == 1);
    CHECK(r == mat({{1, 2}, {0, 0}}));
}

TEST_CASE("rref: identity is fixed") {
    auto [r, rk] = rref(RatMatrix::identity(3));
    CHECK(rk == 3);
    CHECK(r == RatMatrix::identity(3));
}

TEST_CASE("rref: full-rank 2x2 reduces to identity") {
    // hand elimination: det = -2 != 0
    auto [r, rk] = rref(mat({{1, 2}, {3, 4}}));
    CHECK(rk == 2);
    CHECK(r == RatMatrix::identity(2));
}

TEST_CASE("rref is idempotent and canonical on row-equivalent inputs") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix m = testing::random_matrix(gen, 4, 6);
        auto [r1, rank1] = rref(m);
        auto [r2, rank2] = rref(r1);
        CHECK(rank1 == rank2);
        CHECK(r1 == r2);

        // an invertible row mix preserves the row space, hence the RREF
        RatMatrix u = testing::random_unimodular(gen, 4);
        auto [r3, rank3] = rref(u * m);
        CHECK(rank3 == rank1);
        CHECK(r3 == r1);
    }
}

TEST_CASE("kernel: identity has none, zero has everything") {
    CHECK(kernel_basis(RatMatrix::identity(4)).dim() == 0);
    Subspace all = kernel_basis(RatMatrix(3, 3));
    CHECK(all.dim() == 3);
    CHECK(all.basis() == RatMatrix::identity(3));
}

TEST_CASE("kernel: single relation leaves a plane") {
    Subspace k = kernel_basis(mat({{1, 1, 0}}));
    CHECK(k.dim() == 2);
    for (std::size_t t = 0; t < k.dim(); ++t) {
        RatVector v = k.basis_row(t);
        CHECK(v[0] + v[1] == 0);
    }
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 6;
        RatMatrix m = testing::random_matrix(gen, rows, cols);
        CHECK(rank(m) + kernel_basis(m).dim() == cols);
    }
}

TEST_CASE("solve: identity, free-variable convention, inconsistent") {
    auto x = solve(RatMatrix::identity(3), vec({5, -2, 7}));
    REQUIRE(x);
    CHECK(*x == vec({5, -2, 7}));

    auto y = solve(mat({{1, 1}}), vec({2}));
    REQUIRE(y);
    CHECK(*y == vec({2, 0})); // zeros in free coordinates

    CHECK_FALSE(solve(mat({{1}, {1}}), vec({1, 2})));
}

TEST_CASE("solve is exact on random consistent systems") {
    std::mt19937 gen(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 2 + gen() % 4, cols = 2 + gen() % 4;
        RatMatrix m = testing::random_matrix(gen, rows, cols);
        RatVector xs(cols);
        for (auto& e : xs) e = testing::small_rational(gen);
        RatVector b = m * xs;
        auto x = solve(m, b);
        REQUIRE(x);
        CHECK(m * *x == b);
    }
}

TEST_CASE("inverse round-trips") {
    std::mt19937 gen(17);
    RatMatrix u = testing::random_unimodular(gen, 5);
    auto inv = inverse(u);
    REQUIRE(inv);
    CHECK(*inv * u == RatMatrix::identity(5));
    CHECK_FALSE(inverse(mat({{1, 2}, {2, 4}})));
}

TEST_CASE("subspace lattice: A + A = A, trivial intersection") {
    std::vector<RatVector> e1 = {vec({1, 0, 0})};
    std::vector<RatVector> e2 = {vec({0, 1, 0})};
    Subspace a = Subspace::span_of_rows(3, e1);
    Subspace b = Subspace::span_of_rows(3, e2);
    CHECK(subspace_sum(a, a) == a);
    CHECK(subspace_intersect(a, b).dim() == 0);
}

TEST_CASE("subspace intersection: overlapping planes meet in a line") {
    Subspace a = Subspace::span_of_rows(3, {vec({1, 0, 0}), vec({0, 1, 0})});
    Subspace b = Subspace::span_of_rows(3, {vec({0, 1, 0}), vec({0, 0, 1})});
    Subspace meet = subspace_intersect(a, b);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(vec({0, 1, 0})));
}

TEST_CASE("dimension formula dim A + dim B = dim(A+B) + dim(A^B)") {
    std::mt19937 gen(19);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 4 + gen() % 3;
        Subspace a = Subspace::span_of_rows(testing::random_matrix(gen, 1 + gen() % 3, n));
        Subspace b = Subspace::span_of_rows(testing::random_matrix(gen, 1 + gen() % 3, n));
        CHECK(a.dim() + b.dim() ==
              subspace_sum(a, b).dim() + subspace_intersect(a, b).dim());
        CHECK(subspace_sum(a, b).contains(a));
        CHECK(a.contains(subspace_intersect(a, b)));
    }
}

TEST_CASE("minimal polynomial annihilates exactly") {
    std::mt19937 gen(23);
    for (int trial = 0; trial < 10; ++trial) {
        RatMatrix m = testing::random_matrix(gen, 4, 4);
        auto mu = minimal_polynomial(m);
        RatMatrix acc(4, 4);
        RatMatrix power = RatMatrix::identity(4);
        for (std::size_t i = 0; i < mu.size(); ++i) {
            acc = acc + mu[i] * power;
            power = power * m;
        }
        CHECK(acc.is_zero());
        CHECK(mu.back() == 1);
    }
}

TEST_CASE("eigensplit: identity and distinct diagonal") {
    auto full = rational_eigensplit(RatMatrix::identity(2));
    REQUIRE(full);
    REQUIRE(full->size() == 1);
    CHECK((*full)[0].value == 1);
    CHECK((*full)[0].space.dim() == 2);

    RatMatrix d = RatMatrix::diagonal({rat(2), rat(3)});
    auto split = rational_eigensplit(d);
    REQUIRE(split);
    REQUIRE(split->size() == 2);
    CHECK((*split)[0].value == 2);
    CHECK((*split)[0].space.contains(vec({1, 0})));
    CHECK((*split)[1].value == 3);
    CHECK((*split)[1].space.contains(vec({0, 1})));
}

TEST_CASE("eigensplit: rotation does not split over Q") {
    CHECK_FALSE(rational_eigensplit(mat({{0, -1}, {1, 0}})));
}

TEST_CASE("eigensplit: non-integer rational eigenvalues") {
    RatMatrix d = RatMatrix::diagonal({rat(1, 2), rat(1, 2), rat(-3, 5)});
    auto split = rational_eigensplit(d);
    REQUIRE(split);
    REQUIRE(split->size() == 2);
    CHECK((*split)[0].value == rat(-3, 5));
    CHECK((*split)[0].space.dim() == 1);
    CHECK((*split)[1].value == rat(1, 2));
    CHECK((*split)[1].space.dim() == 2);
}

TEST_CASE("eigensplit eigenspaces are pairwise independent") {
    // nilpotent block plus split diagonal: only 0 and 4 are eigenvalues
    RatMatrix m = mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 4}});
    auto split = rational_eigensplit(m);
    CHECK_FALSE(split); // eigenspaces have total dimension 2 < 3
}

TEST_CASE("fraction-free forward phase keeps exactness on an ill-conditioned case") {
    // Hilbert-like matrix: floating point would lose this, exact must not
    RatMatrix h(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) h(i, j) = rat(1, static_cast<long>(i + j + 1));
    CHECK(rank(h) == 4);
    auto inv = inverse(h);
    REQUIRE(inv);
    CHECK(*inv * h == RatMatrix::identity(4));
}
