#pragma once

#include <stdexcept>
#include <string>

namespace ratinterp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division left a nonzero remainder.
struct NonExactDivision : Error {
    using Error::Error;
};

// A variable with negative exponent was bound to zero.
struct DivisionByZeroSymbol : Error {
    using Error::Error;
};

// A denominator factor evaluated (or specialized) to zero.
struct PoleHit : Error {
    using Error::Error;
};

// Point evaluation hit an unbound variable.
struct MissingBinding : Error {
    using Error::Error;
};

// Series inversion needs a unit constant term.
struct NonInvertibleConstantTerm : Error {
    using Error::Error;
};

// An infinite product cannot stabilize below the requested order.
struct TruncationUnreachable : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// CLI expression grammar violation, with 1-based position info.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
          line(line_), column(column_) {}
};

struct UnknownSymbol : Error {
    using Error::Error;
};

} // namespace ratinterp
