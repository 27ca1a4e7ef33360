#pragma once

#include <stdexcept>
#include <string>

namespace slelab {

/// Input outside an operation's domain (wrong wedge, bad labels, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical scheme failed (branch failure, swallowed intermediate point).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slelab
