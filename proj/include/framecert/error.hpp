#ifndef FRAMECERT_ERROR_HPP
#define FRAMECERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace framecert {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact division by zero (rational, Gaussian rational, or polynomial scalar).
struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Malformed textual or JSON input; carries the offending field or token.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Operands live over different variable tables.
struct TableMismatchError : Error {
    explicit TableMismatchError(const std::string& what) : Error(what) {}
};

/// A configured degree/term-count ceiling was hit; computation aborted.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// Iterative numeric routine failed to converge at the requested precision.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

/// Zero-dimensional solve did not land in shape position.
struct ShapePositionError : Error {
    explicit ShapePositionError(const std::string& what) : Error(what) {}
};

}  // namespace framecert

#endif
