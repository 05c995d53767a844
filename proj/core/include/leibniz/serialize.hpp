#ifndef LEIBNIZ_SERIALIZE_HPP
#define LEIBNIZ_SERIALIZE_HPP

#include <map>
#include <string>

#include "leibniz/analysis.hpp"

namespace leibniz {

/*
 * The interchange format. An algebra file is a JSON object
 *
 *   {
 *     "dim": 3,
 *     "labels": ["e", "h", "f"],
 *     "brackets": [[0, 1, 0, "2"], [1, 0, 0, "-2"], ...],
 *     "meta": { ... }                  // optional, free-form
 *   }
 *
 * where [i, j, k, c] means [b_i, b_j] has coefficient c on b_k.
 * Coefficients are strings "p/q" in lowest terms (plain integers are
 * accepted as shorthand on input); unlisted constants are zero.
 * Emitted JSON has sorted keys, brackets sorted by (i,j,k), and exact
 * strings throughout, so output is byte-deterministic.
 */

std::string algebra_to_json(const LeibnizAlgebra& a,
                            const std::map<std::string, std::string>& meta = {});
LeibnizAlgebra algebra_from_json(const std::string& text); // throws ParseError

/// Matrices travel as {"rows": r, "cols": c, "entries": [[...], ...]}.
std::string matrix_to_json(const RatMatrix& m,
                           const std::map<std::string, std::string>& meta = {});
RatMatrix matrix_from_json(const std::string& text); // throws ParseError

std::string report_to_json(const AnalysisReport& rep);

/// Derivation basis, split and formula table as one JSON document.
std::string derivations_to_json(const LeibnizAlgebra& a);

} // namespace leibniz

#endif
