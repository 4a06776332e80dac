#pragma once

#include <stdexcept>
#include <string>

namespace ghs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two polynomials over different variable namespaces were combined.
struct NamespaceMismatch : Error {
    using Error::Error;
};

// A substitution or evaluation met a variable without an assignment.
struct UnassignedVariable : Error {
    using Error::Error;
};

// express_in_generators: the polynomial is not in the subring generated by
// the given set. On catalog data this signals a wrong restriction map.
struct NotInSubring : Error {
    using Error::Error;
};

// express_in_generators: underdetermined system whose solutions differ in
// their linear part. Cannot happen for algebraically independent generators.
struct AmbiguousExpression : Error {
    using Error::Error;
};

// Requested data the library deliberately does not carry (E7/E8 invariant
// generators, Takeuchi form outside E6, invalid rank for a family).
struct Unsupported : Error {
    using Error::Error;
};

// A (ambient, summand, basis indices) triple outside the implemented case
// tables.
struct UnlistedCase : Error {
    using Error::Error;
};

// torus_rank inconsistent with the chosen complement basis.
struct RankMismatch : Error {
    using Error::Error;
};

// Descriptor outside the hypotheses of the closed-form rank rules.
struct NotGeneralisedSymmetric : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos) : Error(what), position(pos) {}
};

}  // namespace ghs
