#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eltlab {

enum class Errc {
    NonInvertible,
    DimensionMismatch,
    NotSquare,
    SingularDeterminant,
    DegeneratePolynomial,
    ZeroVector,
    InvalidArgument,
    InfeasibleAssignment,
    UnboundVariable,
    Syntax,
};

const char* errc_name(Errc code) noexcept;

/// Domain error raised by every module. The code is stable and maps onto CLI
/// exit statuses; the message is a single human-readable line.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Malformed text input. `position` is a 0-based character offset into the
/// parsed string (or line-local offset for file formats).
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(Errc::Syntax, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace eltlab
