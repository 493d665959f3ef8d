#pragma once

#include <stdexcept>
#include <string>

namespace cadorder {

/// An algebraic operation was asked for something undefined, such as the
/// total degree of zero or a resultant with a zero argument.
class AlgebraError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed user input that is not a parse error: bad labels, missing
/// cost rows, inconsistent CSV files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordering enumeration refused because n! exceeds the configured cap.
class OrderingCapExceeded : public std::runtime_error {
 public:
  OrderingCapExceeded(std::size_t vars, std::size_t cap)
      : std::runtime_error("ordering enumeration over " + std::to_string(vars) +
                           " variables exceeds the cap of " + std::to_string(cap)),
        vars_(vars),
        cap_(cap) {}

  [[nodiscard]] std::size_t variables() const { return vars_; }
  [[nodiscard]] std::size_t cap() const { return cap_; }

 private:
  std::size_t vars_;
  std::size_t cap_;
};

/// An internal consistency check failed. Never expected on valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cadorder
