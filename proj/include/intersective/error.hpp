#pragma once

#include <stdexcept>
#include <string>

namespace intersective {

// Bad input: malformed text, violated precondition, unsupported size.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed (e.g. cycle type disagrees with the
// root count at a good prime). Always a bug, never an input problem.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace intersective
