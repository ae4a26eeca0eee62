#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

/// A precondition on the mathematical input was violated (wrong subgroup,
/// non-abelian module, map that is not a homomorphism, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (cycle notation, group files, named ids).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size ceiling was hit (group order, lattice, complex, Aut).
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check that holds by a proven theorem failed. This always indicates an
/// implementation bug, never a property of the input.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fusion
