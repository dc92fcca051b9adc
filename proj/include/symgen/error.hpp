#pragma once

#include <stdexcept>
#include <string>

namespace symgen {

// Bad user input: malformed expressions, violated preconditions, size guards.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Always a bug, never a domain condition.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace symgen
