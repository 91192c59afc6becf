#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace newton {

using Int = std::int64_t;

// Invalid input for an operation whose domain is restricted (non-coprime
// pair, degenerate diagram, out-of-range point, ...).  Every library entry
// point reports bad input by throwing this (or a subclass) rather than by
// asserting, so callers such as the CLI can map it to a clean exit code.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string &what) : std::runtime_error(what) {}
};

// Signed 64-bit overflow in a value computation.  Raised instead of wrapping.
class OverflowError : public DomainError {
  public:
    explicit OverflowError(const std::string &what) : DomainError(what) {}
};

inline Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

} // namespace newton
