#ifndef CELLFROB_ERRORS_HPP
#define CELLFROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cellfrob {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable file, bad coefficient string, out-of-range
/// index, non-bijective index map, rejected builtin parameter.
struct ParseError : Error {
    using Error::Error;
};

/// An axiom of the input algebra failed (degenerate trace form, broken
/// associativity discovered outside validate_*, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// The trace form tau(a_i a_j) is singular; dual bases do not exist.
struct NonDegeneracyError : ValidationError {
    using ValidationError::ValidationError;
};

/// Internal consistency errors: a derived identity that must hold for every
/// Frobenius cellular algebra failed on validated input.  These signal a bug
/// or corrupted data, never a property of a valid input.
struct ConsistencyError : Error {
    using Error::Error;
};

/// Phi-extraction found a coefficient that depends on the probe pair.
struct InconsistentCellStructure : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};

/// A dual-basis product violates the derived congruence mod A_D(>lam).
struct CongruenceViolation : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};

/// I(phi_ST) is not a scalar multiple of the identity on a simple module.
struct SchurExtractionFailure : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};

/// The per-T sums defining k_lambda disagree.
struct TIndependenceViolation : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};

/// G(lam) G'(lam) is not a scalar multiple of the identity.
struct Lemma44Violation : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};

} // namespace cellfrob

#endif
