#pragma once

#include <stdexcept>
#include <string>

namespace qtk {

// Raised when an argument violates an operation's precondition
// (cell outside a diagram, sizes that do not match, a pair that is not
// dominance-ordered, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a computed quantity fails an identity that must hold
// (a residual denominator on an integral-form coefficient, a reduction
// cofactor that is not a polynomial, ...). Always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qtk
