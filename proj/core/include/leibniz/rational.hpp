#ifndef LEIBNIZ_RATIONAL_HPP
#define LEIBNIZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "leibniz/errors.hpp"

namespace leibniz {

// All arithmetic in this library is exact. mpq_class keeps values in
// lowest terms with a positive denominator, which is exactly the
// canonical form the interchange format requires.
using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q". Input need not be in lowest terms.
inline Rational rat_parse(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw ParseError("malformed rational '" + text + "'");
    if (r.get_den() == 0)
        throw ParseError("zero denominator in rational '" + text + "'");
    r.canonicalize();
    return r;
}

/// Canonical form: "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rational& r) {
    return r.get_str();
}

inline bool is_integral(const Rational& r) {
    return r.get_den() == 1;
}

} // namespace leibniz

#endif
