#pragma once

#include <stdexcept>
#include <string>

namespace cohsys {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division left a nonzero remainder. Every quotient in this library is
// supposed to be exact, so this signals a formula misuse or a violated
// hypothesis rather than a recoverable condition.
struct NonExactDivision : Error {
    using Error::Error;
};

// Exponent outside the allowed range (must be >= 1).
struct InvalidExponent : Error {
    using Error::Error;
};

// Numeric type (n, d, k, g) outside the domain of an operation.
struct InvalidType : Error {
    using Error::Error;
};

// Malformed or inverted parameter range.
struct InvalidRange : Error {
    using Error::Error;
};

// Generic invalid argument (bad parse, zero denominator, k > N, ...).
struct InvalidParams : Error {
    using Error::Error;
};

// Degree parity makes a formula inapplicable (rank-2 moduli need d odd).
struct ParityError : Error {
    using Error::Error;
};

// Parameter below an emptiness threshold or outside a chamber range.
struct OutOfRange : Error {
    using Error::Error;
};

// alpha coincides with a wall; chamber polynomials are undefined there.
struct CriticalAlpha : Error {
    using Error::Error;
};

// A computed Poincare polynomial has a negative coefficient. Diagnostic:
// some hypothesis was violated; the result is never silently returned.
struct NegativeCoefficient : Error {
    using Error::Error;
};

}  // namespace cohsys
