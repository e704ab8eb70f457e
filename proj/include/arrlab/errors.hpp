#pragma once

#include <stdexcept>
#include <string>

namespace arrlab {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's contract (order mismatch, bad m, ...).
struct UsageError : Error {
    using Error::Error;
};

// Geometrically or combinatorially degenerate input (identical lines,
// duplicate line in a file, invalid incidence structure, ...).
struct DegenerateInputError : Error {
    using Error::Error;
};

// Parameters of a constructive operation do not admit the construction.
struct ConstructionError : Error {
    using Error::Error;
};

// m-reduction is impossible for the given arrangement.
struct ReductionError : Error {
    using Error::Error;
};

// Malformed input file. `line`/`column` are 1-based when known, 0 otherwise.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};

// A search ceiling or wall-clock budget was exhausted before an answer
// could be certified.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace arrlab
