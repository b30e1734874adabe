#pragma once

#include <stdexcept>
#include <string>

namespace zonomv {

/// Malformed literal or file contents. The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input values failed (length mismatch, negative
/// weight, vanishing denominator factor, index out of range).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zonomv
