#ifndef LEIBNIZ_TESTS_SUPPORT_HPP
#define LEIBNIZ_TESTS_SUPPORT_HPP

#include <random>

#include "leibniz/algebra.hpp"

namespace leibniz::testing {

// mt19937 is fully specified by the standard, so seeded sequences are
// identical on every platform. Distributions are not; draw via modulo.
inline long draw(std::mt19937& gen, long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational small_rational(std::mt19937& gen) {
    long num = draw(gen, -4, 4);
    long den = draw(gen, 1, 3);
    return rat(num, den);
}

inline RatMatrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(gen);
    return m;
}

/// Product of elementary integer row operations: determinant +-1.
inline RatMatrix random_unimodular(std::mt19937& gen, std::size_t n, std::size_t steps = 24) {
    RatMatrix u = RatMatrix::identity(n);
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t r = static_cast<std::size_t>(draw(gen, 0, static_cast<long>(n) - 1));
        std::size_t c = static_cast<std::size_t>(draw(gen, 0, static_cast<long>(n) - 1));
        if (r == c) continue;
        long f = draw(gen, -2, 2);
        if (f == 0) f = 1;
        for (std::size_t j = 0; j < n; ++j) u(r, j) += rat(f) * u(c, j);
    }
    return u;
}

} // namespace leibniz::testing

#endif
