#pragma once

#include <stdexcept>
#include <string>

namespace iga {

// Operation requires a strictly convex or strictly concave map and got a
// neutral one, or an otherwise valid input outside the operation's scope.
class unsupported_operation : public std::logic_error {
 public:
  explicit unsupported_operation(const std::string& msg)
      : std::logic_error(msg) {}
};

// Numerical breakdown: failed factorization, nonpositive eigenvalue,
// non-bracketing root search.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

// A map that violates phi' > 0 where it is actually evaluated.
class invalid_reparametrization : public std::runtime_error {
 public:
  explicit invalid_reparametrization(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace iga
