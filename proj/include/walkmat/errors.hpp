#pragma once

#include <stdexcept>
#include <string>

namespace walkmat {

// Shape mismatch: non-square determinant input, A*v with cols != len(v), ...
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Value outside an operation's domain: m = 0 paths, zero polynomial in a
// resultant, growing a family from a non-member seed, ...
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// graph6 syntax error. offset() is the byte position of the offending
// character within the input line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Floating-point verification failures that signal a numerical (not
// mathematical) problem: eigensolver non-convergence, |S_{m-1}(mu)| below
// tolerance, a bisection bracket without a sign change.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace walkmat
