#pragma once

#include <stdexcept>
#include <string>

namespace kbonacci {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Materializing a word would exceed the configured digit guard.
struct SizeGuardExceeded : Error {
    using Error::Error;
};

// An occurrence query was made with the empty word as factor.
struct EmptyFactor : Error {
    using Error::Error;
};

// A length-restricted operation received a word of the wrong length.
struct WrongLength : Error {
    using Error::Error;
};

// An index or parameter lies outside its documented domain.
struct OutOfRange : Error {
    using Error::Error;
};

// An operation requiring k >= 3 was invoked with a smaller k.
struct KTooSmall : Error {
    using Error::Error;
};

// Exact polynomial division requested where none exists.
struct NotDivisible : Error {
    using Error::Error;
};

// A power-series expansion does not exist (or is not integral).
struct NonExpandable : Error {
    using Error::Error;
};

// The requested counting engine does not apply to the given factor.
struct EngineInapplicable : Error {
    using Error::Error;
};

// A length-2 word matches no family template and no recurrence applies.
struct UnclassifiedFactor : Error {
    using Error::Error;
};

// A closed form was requested for a word that is not a factor.
struct NotAFactorError : Error {
    using Error::Error;
};

// Too few series terms to certify a recurrence fit.
struct InsufficientTerms : Error {
    using Error::Error;
};

// No linear recurrence within the order cap reproduces the series.
struct NoRecurrenceFound : Error {
    using Error::Error;
};

}  // namespace kbonacci
