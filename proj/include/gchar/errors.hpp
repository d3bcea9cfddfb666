#pragma once

#include <stdexcept>
#include <string>

namespace gchar {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed form is an indeterminate 0/0 at this point; the true value has
/// to come from another route.
class DegenerateCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAPerfectSquare : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product of coupling coefficients that should be rational was not.
/// Never expected; indicates an internal inconsistency.
class IrrationalTerm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gchar
