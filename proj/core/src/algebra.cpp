#include "leibniz/algebra.hpp"

#include <set>

#include "leibniz/errors.hpp"

namespace leibniz {

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), sc_(dim * dim * dim) {
    if (labels_.empty()) {
        labels_.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i));
    }
    if (labels_.size() != dim_) throw DimensionMismatch("label count must match dimension");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error("basis labels must be unique");
}

void LeibnizAlgebra::set_c(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
    sc_.at((i * dim_ + j) * dim_ + k) = value;
}

RatVector LeibnizAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    RatVector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
}

Element element(const LeibnizAlgebra& a, RatVector coeffs) {
    if (coeffs.size() != a.dim()) throw DimensionMismatch("element length mismatch");
    return Element{&a, std::move(coeffs)};
}

RatVector bracket_vec(const LeibnizAlgebra& a, const RatVector& x, const RatVector& y) {
    if (x.size() != a.dim() || y.size() != a.dim())
        throw DimensionMismatch("bracket operand length mismatch");
    RatVector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (y[j] == 0) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.c(i, j, k) != 0) out[k] += f * a.c(i, j, k);
        }
    }
    return out;
}

Element bracket(const Element& x, const Element& y) {
    if (x.algebra == nullptr || x.algebra != y.algebra)
        throw AlgebraMismatch("bracket of elements from different algebras");
    return Element{x.algebra, bracket_vec(*x.algebra, x.coeffs, y.coeffs)};
}

std::vector<LeibnizDefect> leibniz_defects(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<LeibnizDefect> defects;
    // cache the basis product table
    std::vector<RatVector> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = a.basis_bracket(i, j);

    auto expand = [&](std::size_t i, const RatVector& v) {
        RatVector out(n);
        for (std::size_t t = 0; t < n; ++t) {
            if (v[t] == 0) continue;
            const RatVector& p = table[i * n + t];
            for (std::size_t k = 0; k < n; ++k)
                if (p[k] != 0) out[k] += v[t] * p[k];
        }
        return out;
    };
    auto expand_right = [&](const RatVector& v, std::size_t j) {
        RatVector out(n);
        for (std::size_t t = 0; t < n; ++t) {
            if (v[t] == 0) continue;
            const RatVector& p = table[t * n + j];
            for (std::size_t k = 0; k < n; ++k)
                if (p[k] != 0) out[k] += v[t] * p[k];
        }
        return out;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RatVector lhs = expand(i, table[j * n + k]);
                RatVector mid = expand_right(table[i * n + j], k);
                RatVector rhs = expand_right(table[i * n + k], j);
                RatVector defect(n);
                bool nonzero = false;
                for (std::size_t t = 0; t < n; ++t) {
                    defect[t] = lhs[t] - mid[t] + rhs[t];
                    if (defect[t] != 0) nonzero = true;
                }
                if (nonzero) defects.push_back({i, j, k, std::move(defect)});
            }
    return defects;
}

bool is_lie(const LeibnizAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.c(i, j, k) != -a.c(j, i, k)) return false;
    return true;
}

IdealSubspace squares_ideal(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(a.basis_bracket(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(a.basis_bracket(i, j) + a.basis_bracket(j, i));
    IdealSubspace ideal;
    ideal.space = Subspace::span_of_rows(n, gens);

    // [I, L] must stay inside I and [L, I] must vanish.
    ideal.is_right_ideal = true;
    ideal.is_left_ideal = true;
    for (std::size_t t = 0; t < ideal.space.dim(); ++t) {
        RatVector v = ideal.space.basis_row(t);
        for (std::size_t j = 0; j < n; ++j) {
            if (!ideal.space.contains(bracket_vec(a, v, unit_vector(n, j))))
                ideal.is_right_ideal = false;
            if (!is_zero(bracket_vec(a, unit_vector(n, j), v)))
                ideal.is_left_ideal = false;
        }
    }
    ideal.is_two_sided = ideal.is_left_ideal && ideal.is_right_ideal;
    if (!ideal.is_two_sided)
        throw IdealViolation("squares span fails the ideal check; input is not a Leibniz algebra");
    return ideal;
}

Liezation liezation(const LeibnizAlgebra& a) {
    IdealSubspace ideal = squares_ideal(a);
    const std::size_t n = a.dim();
    const std::size_t q = n - ideal.space.dim();

    std::vector<std::size_t> complement;
    {
        std::size_t p = 0;
        const auto& pivots = ideal.space.pivots();
        for (std::size_t c = 0; c < n; ++c) {
            if (p < pivots.size() && pivots[p] == c) { ++p; continue; }
            complement.push_back(c);
        }
    }

    // projection: reduce modulo I, then read off the complement coordinates
    RatMatrix proj(q, n);
    for (std::size_t c = 0; c < n; ++c) {
        RatVector image = unit_vector(n, c);
        for (std::size_t t = 0; t < ideal.space.dim(); ++t) {
            const Rational& f = image[ideal.space.pivots()[t]];
            if (f == 0) continue;
            Rational scale = f;
            for (std::size_t j = 0; j < n; ++j)
                if (ideal.space.basis()(t, j) != 0) image[j] -= scale * ideal.space.basis()(t, j);
        }
        for (std::size_t t = 0; t < q; ++t) proj(t, c) = image[complement[t]];
    }

    std::vector<std::string> labels;
    for (std::size_t t : complement) labels.push_back(a.labels()[t]);
    LeibnizAlgebra quotient(q, labels);
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t) {
            RatVector prod = proj * a.basis_bracket(complement[s], complement[t]);
            for (std::size_t k = 0; k < q; ++k)
                if (prod[k] != 0) quotient.set_c(s, t, k, prod[k]);
        }
    return Liezation{std::move(quotient), std::move(proj), std::move(complement)};
}

RatMatrix killing_form(const LeibnizAlgebra& g) {
    if (!is_lie(g)) throw NotLie("Killing form requires a Lie algebra");
    const std::size_t n = g.dim();
    std::vector<RatMatrix> ad;
    ad.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ad.push_back(left_mult(g, unit_vector(n, i)));
    RatMatrix kappa(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational t = (ad[i] * ad[j]).trace();
            kappa(i, j) = t;
            kappa(j, i) = t;
        }
    return kappa;
}

bool is_semisimple_liezation(const LeibnizAlgebra& a) {
    Liezation lz = liezation(a);
    if (lz.algebra.dim() == 0) return false;
    RatMatrix kappa = killing_form(lz.algebra);
    return rank(kappa) == lz.algebra.dim();
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    const std::size_t n = a.dim(), m = b.dim();
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back(l + "#1");
    for (const auto& l : b.labels()) labels.push_back(l + "#2");
    LeibnizAlgebra out(n + m, labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.c(i, j, k) != 0) out.set_c(i, j, k, a.c(i, j, k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (b.c(i, j, k) != 0) out.set_c(n + i, n + j, n + k, b.c(i, j, k));
    return out;
}

Subspace center(const LeibnizAlgebra& a) {
    // x is central iff R_{b_j} x = 0 and L_{b_j} x = 0 for all j
    const std::size_t n = a.dim();
    RatMatrix stacked(2 * n * n, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
        RatMatrix r = right_mult(a, unit_vector(n, j));
        RatMatrix l = left_mult(a, unit_vector(n, j));
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t c = 0; c < n; ++c) {
                stacked(row, c) = r(k, c);
                stacked(row + 1, c) = l(k, c);
            }
            row += 2;
        }
    }
    return kernel_basis(stacked);
}

Subspace derived_subalgebra(const LeibnizAlgebra& a) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) rows.push_back(a.basis_bracket(i, j));
    return Subspace::span_of_rows(a.dim(), rows);
}

RatMatrix right_mult(const LeibnizAlgebra& a, const RatVector& x) {
    if (x.size() != a.dim()) throw DimensionMismatch("right_mult operand length mismatch");
    const std::size_t n = a.dim();
    RatMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.c(j, i, k) != 0) r(k, j) += x[i] * a.c(j, i, k);
    }
    return r;
}

RatMatrix left_mult(const LeibnizAlgebra& a, const RatVector& x) {
    if (x.size() != a.dim()) throw DimensionMismatch("left_mult operand length mismatch");
    const std::size_t n = a.dim();
    RatMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.c(i, j, k) != 0) l(k, j) += x[i] * a.c(i, j, k);
    }
    return l;
}

bool is_algebra_automorphism(const LeibnizAlgebra& a, const RatMatrix& m) {
    if (m.rows() != a.dim() || m.cols() != a.dim()) return false;
    if (rank(m) != a.dim()) return false;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        RatVector mi = m.col(i);
        for (std::size_t j = 0; j < n; ++j) {
            RatVector lhs = m * a.basis_bracket(i, j);
            RatVector rhs = bracket_vec(a, mi, m.col(j));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const RatMatrix& p) {
    if (p.rows() != a.dim() || p.cols() != a.dim())
        throw DimensionMismatch("change_basis: matrix shape mismatch");
    auto pinv = inverse(p);
    if (!pinv) throw Error("change_basis: singular transition matrix");
    const std::size_t n = a.dim();
    LeibnizAlgebra out(n, a.labels());
    for (std::size_t i = 0; i < n; ++i) {
        RatVector pi = p.col(i);
        for (std::size_t j = 0; j < n; ++j) {
            RatVector prod = *pinv * bracket_vec(a, pi, p.col(j));
            for (std::size_t k = 0; k < n; ++k)
                if (prod[k] != 0) out.set_c(i, j, k, prod[k]);
        }
    }
    return out;
}

LeibnizAlgebra subalgebra_on(const LeibnizAlgebra& a, const Subspace& s,
                             const std::string& label_prefix) {
    const std::size_t d = s.dim();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(label_prefix + std::to_string(i));
    LeibnizAlgebra out(d, labels);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            RatVector prod = bracket_vec(a, s.basis_row(i), s.basis_row(j));
            auto coords = s.coordinates(prod);
            if (!coords) throw NotInvariant("subspace is not closed under the bracket");
            for (std::size_t k = 0; k < d; ++k)
                if ((*coords)[k] != 0) out.set_c(i, j, k, (*coords)[k]);
        }
    return out;
}

} // namespace leibniz
