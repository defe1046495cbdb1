// Error types shared across the library. Every failure mode callers are
// expected to handle gets its own type so tests can match on it.
#pragma once

#include <stdexcept>
#include <string>

namespace tbcc {

// Base class; everything the library throws on bad input derives from this.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch between operands (row/column counts, vector widths).
struct DimensionError : Error {
    using Error::Error;
};

// Malformed textual input (polynomial syntax, octal tokens, span strings).
struct ParseError : Error {
    using Error::Error;
};

// A basis operation met linearly dependent rows or an all-zero row.
struct DegenerateBasisError : Error {
    using Error::Error;
};

// A column op hit an all-zero column.
struct DegenerateColumnError : Error {
    using Error::Error;
};

// Monomial division requested beyond the column's actual factor.
struct NonDivisibleError : Error {
    using Error::Error;
};

// Tail-biting section count too small for the memory involved.
struct SectionLengthError : Error {
    using Error::Error;
};

// Encoder matrix failed structural requirements (zero rows, zero columns,
// rational rank deficiency).
struct InvalidEncoderError : Error {
    using Error::Error;
};

// Operation requires a canonical (basic and reduced) encoder.
struct NoncanonicalInputError : Error {
    using Error::Error;
};

// Code does not touch every coordinate; spans are undefined.
struct FullSupportError : Error {
    using Error::Error;
};

// The tail-biting generator matrix is rank deficient.
struct DegenerateTailBitingError : Error {
    using Error::Error;
};

// A row selection is not a union of rho_{i n0} shift orbits.
struct NotShiftStructuredError : Error {
    using Error::Error;
};

// A candidate row selection is unusable (wrong basic-row count etc.).
struct SelectionError : Error {
    using Error::Error;
};

// Exhaustive enumeration would exceed the desk-scale budget.
struct OracleBudgetError : Error {
    using Error::Error;
};

// Trellis state space would exceed the desk-scale budget.
struct StateBudgetError : Error {
    using Error::Error;
};

}  // namespace tbcc
