#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for every contract violation thrown by the library.
/// Expected outcomes (no solution, decomposition not realizable over the
/// rationals) are returned as values, never thrown.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& what) : Error(what) {}
};

/// A computed span failed its ideal check; signals corrupted input.
struct IdealViolation : Error {
    explicit IdealViolation(const std::string& what) : Error(what) {}
};

struct NotLie : Error {
    explicit NotLie(const std::string& what) : Error(what) {}
};

/// A subspace expected to be carried into itself is not.
struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what) : Error(what) {}
};

struct NotAutomorphism : Error {
    explicit NotAutomorphism(const std::string& what) : Error(what) {}
};

/// A component handed to `assemble` fails its precondition.
struct ComponentIncompatible : Error {
    explicit ComponentIncompatible(const std::string& what) : Error(what) {}
};

/// The three-way derivation split does not add up; signals a
/// non-semisimple input where a semisimple one was required.
struct SplitMismatch : Error {
    explicit SplitMismatch(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace leibniz

#endif
