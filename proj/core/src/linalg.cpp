#include "leibniz/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

// row := row * prow[c] - row[c] * prow, in place. Afterwards row[c] == 0.
void cross_eliminate(std::vector<Integer>& row, const std::vector<Integer>& prow, std::size_t c) {
    Integer factor = row[c];
    const Integer& pivot = prow[c];
    for (std::size_t j = 0; j < row.size(); ++j) {
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
        if (prow[j] != 0)
            mpz_submul(row[j].get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
    }
}

} // namespace

RowEliminator::RowEliminator(std::size_t width)
    : width_(width), pivot_of_col_(width, -1) {}

void RowEliminator::normalize(std::vector<Integer>& row) const {
    Integer content = 0;
    for (const auto& x : row) {
        if (x == 0) continue;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content == 1) break;
    }
    if (content == 0) return;
    const Integer* lead = nullptr;
    for (const auto& x : row)
        if (x != 0) { lead = &x; break; }
    if (*lead < 0) mpz_neg(content.get_mpz_t(), content.get_mpz_t());
    if (content == 1) return;
    for (auto& x : row)
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
}

bool RowEliminator::add_row(const RatVector& row) {
    if (row.size() != width_) throw DimensionMismatch("eliminator row width mismatch");
    Integer scale = 1;
    for (const auto& r : row)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.get_den_mpz_t());
    std::vector<Integer> irow(width_);
    for (std::size_t j = 0; j < width_; ++j) {
        if (row[j] == 0) continue;
        Integer q;
        mpz_divexact(q.get_mpz_t(), scale.get_mpz_t(), row[j].get_den_mpz_t());
        irow[j] = Integer(row[j].get_num()) * q;
    }
    return add_integer_row(std::move(irow));
}

bool RowEliminator::add_integer_row(std::vector<Integer> row) {
    if (row.size() != width_) throw DimensionMismatch("eliminator row width mismatch");

    // One ascending pass suffices: stored rows are fully reduced, so an
    // elimination never reintroduces a nonzero at a pivot column.
    for (std::size_t c = 0; c < width_; ++c) {
        if (row[c] == 0 || pivot_of_col_[c] < 0) continue;
        cross_eliminate(row, rows_[static_cast<std::size_t>(pivot_of_col_[c])], c);
    }

    std::size_t lead = width_;
    for (std::size_t c = 0; c < width_; ++c)
        if (row[c] != 0) { lead = c; break; }
    if (lead == width_) return false;

    normalize(row);

    // Keep the stored rows reduced against the new pivot.
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        if (rows_[t][lead] == 0) continue;
        cross_eliminate(rows_[t], row, lead);
        normalize(rows_[t]);
    }

    pivot_of_col_[lead] = static_cast<int>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(row));
    return true;
}

RatMatrix RowEliminator::rref_rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    RatMatrix out(rows_.size(), width_);
    for (std::size_t t = 0; t < order.size(); ++t) {
        const auto& row = rows_[order[t]];
        const Integer& lead = row[pivots_[order[t]]];
        for (std::size_t j = 0; j < width_; ++j)
            if (row[j] != 0) out(t, j) = rat(row[j], lead);
    }
    return out;
}

RrefResult rref(const RatMatrix& m) {
    RowEliminator elim(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) elim.add_row(m.row(i));
    RatMatrix reduced = elim.rref_rows();
    RatMatrix padded(m.rows(), m.cols());
    for (std::size_t i = 0; i < reduced.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) padded(i, j) = reduced(i, j);
    return {std::move(padded), elim.rank()};
}

std::size_t rank(const RatMatrix& m) {
    RowEliminator elim(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) elim.add_row(m.row(i));
    return elim.rank();
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length mismatch");
    RowEliminator elim(m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        RatVector row = m.row(i);
        row.push_back(b[i]);
        elim.add_row(row);
    }
    if (elim.has_pivot(m.cols())) return std::nullopt;
    RatMatrix reduced = elim.rref_rows();
    RatVector x(m.cols());
    // rref_rows orders rows by pivot column; recover pivots from the rows.
    for (std::size_t t = 0; t < reduced.rows(); ++t) {
        std::size_t pc = 0;
        while (pc < m.cols() && reduced(t, pc) == 0) ++pc;
        if (pc == m.cols()) continue;
        x[pc] = reduced(t, m.cols());
    }
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RowEliminator elim(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVector row = m.row(i);
        row.resize(2 * n);
        row[n + i] = 1;
        elim.add_row(row);
    }
    for (std::size_t c = 0; c < n; ++c)
        if (!elim.has_pivot(c)) return std::nullopt;
    RatMatrix reduced = elim.rref_rows();
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
    return inv;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = RatMatrix(0, ambient_dim);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = RatMatrix::identity(ambient_dim);
    s.pivots_.resize(ambient_dim);
    std::iota(s.pivots_.begin(), s.pivots_.end(), 0);
    return s;
}

Subspace Subspace::span_of_rows(std::size_t ambient_dim, const std::vector<RatVector>& rows) {
    RowEliminator elim(ambient_dim);
    for (const auto& r : rows) elim.add_row(r);
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = elim.rref_rows();
    s.pivots_ = elim.pivot_cols();
    std::sort(s.pivots_.begin(), s.pivots_.end());
    return s;
}

Subspace Subspace::span_of_rows(const RatMatrix& rows) {
    std::vector<RatVector> rs;
    rs.reserve(rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) rs.push_back(rows.row(i));
    return span_of_rows(rows.cols(), rs);
}

bool Subspace::contains(const RatVector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("contains: ambient mismatch");
    RatVector r = v;
    for (std::size_t t = 0; t < basis_.rows(); ++t) {
        const Rational& c = r[pivots_[t]];
        if (c == 0) continue;
        Rational f = c;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_(t, j) != 0) r[j] -= f * basis_(t, j);
    }
    return leibniz::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<RatVector> Subspace::coordinates(const RatVector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("coordinates: ambient mismatch");
    RatVector coords(dim());
    for (std::size_t t = 0; t < dim(); ++t) coords[t] = v[pivots_[t]];
    // verify: RREF basis rows have identity at the pivot columns
    RatVector check(ambient_);
    for (std::size_t t = 0; t < dim(); ++t)
        if (coords[t] != 0)
            for (std::size_t j = 0; j < ambient_; ++j)
                if (basis_(t, j) != 0) check[j] += coords[t] * basis_(t, j);
    if (check != v) return std::nullopt;
    return coords;
}

Subspace kernel_basis(const RatMatrix& m) {
    RowEliminator elim(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) elim.add_row(m.row(i));
    RatMatrix reduced = elim.rref_rows();
    std::vector<std::size_t> pivots = elim.pivot_cols();
    std::sort(pivots.begin(), pivots.end());

    std::vector<RatVector> gens;
    std::size_t p = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (p < pivots.size() && pivots[p] == f) { ++p; continue; }
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -reduced(t, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span_of_rows(m.cols(), gens);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspace sum: ambient mismatch");
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_row(i));
    return Subspace::span_of_rows(a.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspace intersect: ambient mismatch");
    const std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
    // u A = v B  <=>  (u, v) in the kernel of [A^t | -B^t]
    RatMatrix sys(n, da + db);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < da; ++t) sys(i, t) = a.basis()(t, i);
        for (std::size_t t = 0; t < db; ++t) sys(i, da + t) = -b.basis()(t, i);
    }
    Subspace ker = kernel_basis(sys);
    std::vector<RatVector> rows;
    for (std::size_t t = 0; t < ker.dim(); ++t) {
        RatVector uv = ker.basis_row(t);
        RatVector w(n);
        for (std::size_t s = 0; s < da; ++s)
            if (uv[s] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    if (a.basis()(s, j) != 0) w[j] += uv[s] * a.basis()(s, j);
        rows.push_back(std::move(w));
    }
    return Subspace::span_of_rows(n, rows);
}

std::vector<Rational> minimal_polynomial(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("minimal polynomial of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {Rational(1)};

    RowEliminator elim(n * n);
    std::vector<RatMatrix> powers;
    powers.push_back(RatMatrix::identity(n));
    for (std::size_t k = 0;; ++k) {
        if (!elim.add_row(powers[k].vec())) {
            // first dependency: m^k = sum of lower powers
            RatMatrix cols(n * n, k);
            for (std::size_t i = 0; i < k; ++i) {
                RatVector vi = powers[i].vec();
                for (std::size_t rix = 0; rix < n * n; ++rix) cols(rix, i) = vi[rix];
            }
            auto coeff = solve(cols, powers[k].vec());
            if (!coeff) throw Error("minimal polynomial: dependency solve failed");
            std::vector<Rational> poly(k + 1);
            for (std::size_t i = 0; i < k; ++i) poly[i] = -(*coeff)[i];
            poly[k] = 1;
            return poly;
        }
        powers.push_back(powers[k] * m);
        if (k > n) throw Error("minimal polynomial: no dependency found");
    }
}

namespace {

Integer poly_eval(const std::vector<Integer>& coeffs, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs[i];
    }
    return acc;
}

} // namespace

std::optional<std::vector<Eigenpair>> rational_eigensplit(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("eigensplit of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return std::vector<Eigenpair>{};

    // Scale to an integer matrix: integer eigenvalues of d*m correspond to
    // rational eigenvalues of m, and the minimal polynomial of an integer
    // matrix is monic with integer coefficients, so every rational root of
    // it is an integer dividing the constant term.
    Integer d = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
    RatMatrix scaled = Rational(d) * m;
    std::vector<Rational> mu = minimal_polynomial(scaled);
    std::vector<Integer> coeffs(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!is_integral(mu[i])) throw Error("eigensplit: non-integral minimal polynomial");
        coeffs[i] = mu[i].get_num();
    }

    std::vector<Integer> roots;
    std::size_t shift = 0;
    while (shift < coeffs.size() - 1 && coeffs[shift] == 0) ++shift;
    if (shift > 0) roots.push_back(0);
    std::vector<Integer> p(coeffs.begin() + static_cast<long>(shift), coeffs.end());

    if (p.size() > 1) {
        Integer bound = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            Integer a;
            mpz_abs(a.get_mpz_t(), p[i].get_mpz_t());
            if (a > bound) bound = a;
        }
        bound += 1;
        if (bound > 5'000'000)
            throw Error("eigensplit: integer root scan bound exceeded");
        const Integer& a0 = p[0];
        for (Integer t = 1; t <= bound; ++t) {
            if (!mpz_divisible_p(a0.get_mpz_t(), t.get_mpz_t())) continue;
            if (poly_eval(p, t) == 0) roots.push_back(t);
            Integer neg = -t;
            if (poly_eval(p, neg) == 0) roots.push_back(neg);
        }
    }

    std::vector<Eigenpair> pairs;
    std::size_t total = 0;
    for (const auto& r : roots) {
        Rational lambda = rat(r, d);
        RatMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
        Subspace space = kernel_basis(shifted);
        total += space.dim();
        pairs.push_back({lambda, std::move(space)});
    }
    if (total != n) return std::nullopt;
    std::sort(pairs.begin(), pairs.end(),
              [](const Eigenpair& a, const Eigenpair& b) { return a.value < b.value; });
    return pairs;
}

} // namespace leibniz
