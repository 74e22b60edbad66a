#pragma once

#include <stdexcept>
#include <string>

namespace hedetniemi {

/// Bad parameters or a violated precondition of a public operation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed DIMACS or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential enumeration or search was refused because the input is
/// larger than the configured guard.
class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced an object that contradicts its own invariants
/// (vertex count, wide-coloring, distinctness). Always a bug or a wrong
/// reading of a definition, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hedetniemi
