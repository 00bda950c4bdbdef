#pragma once

#include <stdexcept>
#include <string>

namespace bidiff {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing values from incompatible contexts (e.g. two radicals over different
// discriminants).
struct ContextError : Error {
    using Error::Error;
};

// Division by zero or inversion of zero.
struct DivisionError : Error {
    using Error::Error;
};

// divide_exact called on a non-divisible pair; signals an internal bug in the
// calling algorithm, not bad user input.
struct DivisibilityError : Error {
    using Error::Error;
};

// A documented precondition was violated.
struct ContractError : Error {
    using Error::Error;
};

// make_field rejected (u = 0, repeated or non-real eigenvalues, root-of-unity
// eigenvalue ratio).
struct FieldConstructionError : Error {
    using Error::Error;
};

// spread_set called on a non-coprime pair, whose spread may be infinite.
struct InfiniteSpreadError : Error {
    using Error::Error;
};

// q_approx asked for a real embedding that does not exist (D < 0).
struct UnsupportedEmbeddingError : Error {
    using Error::Error;
};

// Precision escalation hit its ceiling without resolving an ambiguity.
struct PrecisionExhaustedError : Error {
    using Error::Error;
};

// Expression syntax error; carries the byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace bidiff
