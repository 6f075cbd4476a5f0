#pragma once

#include <stdexcept>
#include <string>

namespace circlezeros {

// Thrown when a library invariant that should be unreachable is violated
// (e.g. a transform that a theorem guarantees to be real comes out complex).
// Reaching one of these is a bug in the caller's classification or in the
// library itself, never a property of the input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Input errors (malformed text, empty polynomial, ...) are reported as
// std::invalid_argument; violated operation preconditions (zero divisor,
// non-real polynomial where a real one is required, ...) as
// std::domain_error.  The CLI maps these to exit codes 2 and 3.

}  // namespace circlezeros
