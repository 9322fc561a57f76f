#pragma once

#include <stdexcept>
#include <string>

namespace krs {

/// Two operands were built for different genera.
class GenusMismatch : public std::invalid_argument {
public:
  GenusMismatch(int lhs, int rhs)
      : std::invalid_argument("genus mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

class IndexOutOfRange : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// A value violates the invariants of its type (not a bijection, not symplectic, ...).
class InvalidValue : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's precondition on an admissible element does not hold.
class PreconditionFailed : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The alcove of an element lies on the wall being tested against.
class WallIncidence : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class MixedCosets : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require_same_genus(int lhs, int rhs) {
  if (lhs != rhs) throw GenusMismatch(lhs, rhs);
}

} // namespace krs
