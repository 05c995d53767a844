#include "leibniz/automorphisms.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

bool is_automorphism(const LeibnizAlgebra& l, const RatMatrix& m) {
    return is_algebra_automorphism(l, m);
}

RatMatrix exp_nilpotent(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("exp_nilpotent: non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix sum = RatMatrix::identity(n);
    RatMatrix power = RatMatrix::identity(n);
    Rational factorial = 1;
    for (std::size_t p = 1; p <= n; ++p) {
        power = power * m;
        if (power.is_zero()) return sum;
        factorial *= Rational(static_cast<long>(p));
        sum = sum + rat(1, 1) / factorial * power;
    }
    throw Error("exp_nilpotent: matrix is not nilpotent");
}

namespace {

struct LeviCoords {
    RatMatrix t;     // columns: S basis then I basis
    RatMatrix t_inv;
    std::size_t g, k, n;
};

LeviCoords levi_coords(const LeibnizAlgebra& l, const LeviDecomposition& levi) {
    LeviCoords lc;
    lc.n = l.dim();
    lc.g = levi.s_part.dim();
    lc.k = levi.ideal.space.dim();
    if (lc.g + lc.k != lc.n) throw DimensionMismatch("Levi data does not span the algebra");
    lc.t = RatMatrix(lc.n, lc.n);
    for (std::size_t a = 0; a < lc.g; ++a)
        for (std::size_t r = 0; r < lc.n; ++r) lc.t(r, a) = levi.s_part.basis()(a, r);
    for (std::size_t b = 0; b < lc.k; ++b)
        for (std::size_t r = 0; r < lc.n; ++r) lc.t(r, lc.g + b) = levi.ideal.space.basis()(b, r);
    auto inv = inverse(lc.t);
    if (!inv) throw Error("Levi basis is singular");
    lc.t_inv = std::move(*inv);
    return lc;
}

bool intertwines_twisted(const ModuleRep& i_mod, const RatMatrix& phi1, const RatMatrix& phi_i) {
    // phi_i rho(x) = rho(phi1 x) phi_i for all basis x
    for (std::size_t t = 0; t < i_mod.lie.dim(); ++t)
        if (phi_i * i_mod.action[t] != i_mod.act(phi1.col(t)) * phi_i) return false;
    return true;
}

bool hom_into_twisted(const LeibnizAlgebra& s_abs, const ModuleRep& i_mod,
                      const RatMatrix& phi1, const RatMatrix& phi2) {
    // phi2([x,y]) = rho(phi1 y) phi2(x) for all basis pairs
    for (std::size_t a = 0; a < s_abs.dim(); ++a)
        for (std::size_t b = 0; b < s_abs.dim(); ++b) {
            RatVector lhs = phi2 * s_abs.basis_bracket(a, b);
            RatVector rhs = i_mod.act(phi1.col(b)) * phi2.col(a);
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace

BlockDecomposition block_decompose(const LeibnizAlgebra& l, const LeviDecomposition& levi,
                                   const RatMatrix& phi) {
    if (!is_automorphism(l, phi))
        throw NotAutomorphism("block_decompose: input is not an automorphism");
    LeviCoords lc = levi_coords(l, levi);
    RatMatrix pl = lc.t_inv * phi * lc.t;

    for (std::size_t r = 0; r < lc.g; ++r)
        for (std::size_t c = lc.g; c < lc.n; ++c)
            if (pl(r, c) != 0)
                throw NotAutomorphism("block_decompose: the squares ideal is not preserved");

    BlockDecomposition bd;
    bd.phi1 = RatMatrix(lc.g, lc.g);
    bd.phi2 = RatMatrix(lc.k, lc.g);
    bd.phi_i = RatMatrix(lc.k, lc.k);
    for (std::size_t r = 0; r < lc.g; ++r)
        for (std::size_t c = 0; c < lc.g; ++c) bd.phi1(r, c) = pl(r, c);
    for (std::size_t r = 0; r < lc.k; ++r)
        for (std::size_t c = 0; c < lc.g; ++c) bd.phi2(r, c) = pl(lc.g + r, c);
    for (std::size_t r = 0; r < lc.k; ++r)
        for (std::size_t c = 0; c < lc.k; ++c) bd.phi_i(r, c) = pl(lc.g + r, lc.g + c);

    LeibnizAlgebra s_abs = levi_subalgebra(l, levi);
    ModuleRep i_mod = levi_module(l, levi);
    if (!is_algebra_automorphism(s_abs, bd.phi1))
        throw Error("block_decompose: S-block is not an automorphism of S");
    if (rank(bd.phi_i) != lc.k || !intertwines_twisted(i_mod, bd.phi1, bd.phi_i))
        throw Error("block_decompose: I-block is not an isomorphism onto the twisted ideal");
    if (!hom_into_twisted(s_abs, i_mod, bd.phi1, bd.phi2))
        throw Error("block_decompose: mixed block is not a homomorphism into the twisted ideal");
    return bd;
}

RatMatrix assemble(const LeibnizAlgebra& l, const LeviDecomposition& levi,
                   const RatMatrix& phi1, const RatMatrix& phi_i, const RatMatrix& phi2) {
    LeviCoords lc = levi_coords(l, levi);
    if (phi1.rows() != lc.g || phi1.cols() != lc.g || phi_i.rows() != lc.k ||
        phi_i.cols() != lc.k || phi2.rows() != lc.k || phi2.cols() != lc.g)
        throw DimensionMismatch("assemble: component shapes do not match the Levi split");

    LeibnizAlgebra s_abs = levi_subalgebra(l, levi);
    ModuleRep i_mod = levi_module(l, levi);
    if (!is_algebra_automorphism(s_abs, phi1))
        throw ComponentIncompatible("assemble: phi1 is not an automorphism of S");
    if (rank(phi_i) != lc.k)
        throw ComponentIncompatible("assemble: phi_i is singular");
    if (!intertwines_twisted(i_mod, phi1, phi_i))
        throw ComponentIncompatible("assemble: phi_i does not intertwine the twisted action");
    if (!hom_into_twisted(s_abs, i_mod, phi1, phi2))
        throw ComponentIncompatible("assemble: phi2 is not a homomorphism into the twisted ideal");

    RatMatrix pl(lc.n, lc.n);
    for (std::size_t r = 0; r < lc.g; ++r)
        for (std::size_t c = 0; c < lc.g; ++c) pl(r, c) = phi1(r, c);
    for (std::size_t r = 0; r < lc.k; ++r)
        for (std::size_t c = 0; c < lc.g; ++c) pl(lc.g + r, c) = phi2(r, c);
    for (std::size_t r = 0; r < lc.k; ++r)
        for (std::size_t c = 0; c < lc.k; ++c) pl(lc.g + r, lc.g + c) = phi_i(r, c);
    RatMatrix phi = lc.t * pl * lc.t_inv;
    if (!is_automorphism(l, phi))
        throw ComponentIncompatible("assemble: assembled map fails the automorphism check");
    return phi;
}

std::pair<RatMatrix, RatMatrix> factor_semidirect(const LeibnizAlgebra& l,
                                                  const LeviDecomposition& levi,
                                                  const RatMatrix& phi) {
    BlockDecomposition bd = block_decompose(l, levi, phi);
    LeviCoords lc = levi_coords(l, levi);

    RatMatrix psi_l(lc.n, lc.n), eta_l(lc.n, lc.n);
    for (std::size_t r = 0; r < lc.g; ++r)
        for (std::size_t c = 0; c < lc.g; ++c) psi_l(r, c) = bd.phi1(r, c);
    for (std::size_t r = 0; r < lc.k; ++r)
        for (std::size_t c = 0; c < lc.k; ++c) psi_l(lc.g + r, lc.g + c) = bd.phi_i(r, c);

    auto phi_i_inv = inverse(bd.phi_i);
    if (!phi_i_inv) throw NotAutomorphism("factor_semidirect: singular I-block");
    RatMatrix corr = *phi_i_inv * bd.phi2;
    for (std::size_t r = 0; r < lc.n; ++r) eta_l(r, r) = 1;
    for (std::size_t r = 0; r < lc.k; ++r)
        for (std::size_t c = 0; c < lc.g; ++c) eta_l(lc.g + r, c) = corr(r, c);

    RatMatrix psi = lc.t * psi_l * lc.t_inv;
    RatMatrix eta = lc.t * eta_l * lc.t_inv;
    if (psi * eta != phi)
        throw Error("factor_semidirect: factorization does not reproduce the input");
    return {psi, eta};
}

bool extendable(const RatMatrix& sigma, const ModuleRep& ideal) {
    return modules_isomorphic(ideal, twist_module(ideal, sigma));
}

RatMatrix swap_automorphism(const LeibnizAlgebra& l, const std::vector<std::size_t>& perm) {
    const std::size_t m = perm.size();
    if (m == 0 || l.dim() % m != 0)
        throw DimensionMismatch("swap_automorphism: dimension is not a multiple of the copy count");
    std::vector<bool> hit(m, false);
    for (std::size_t t : perm) {
        if (t >= m || hit[t]) throw Error("swap_automorphism: not a permutation");
        hit[t] = true;
    }
    const std::size_t block = l.dim() / m;
    RatMatrix p(l.dim(), l.dim());
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t a = 0; a < block; ++a) p(perm[t] * block + a, t * block + a) = 1;
    if (!is_automorphism(l, p))
        throw NotAutomorphism("swap_automorphism: blocks are not interchangeable");
    return p;
}

} // namespace leibniz
