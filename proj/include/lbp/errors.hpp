#pragma once

#include <stdexcept>
#include <string>

namespace lbp {

// A mathematical precondition failed: zero divisor, non-invertible constant
// term, vanishing determinant, inapplicable route.
class MathError : public std::domain_error {
 public:
  explicit MathError(const std::string& what) : std::domain_error(what) {}
};

// Malformed input from a caller: unparsable scalar, unknown kind, bad index.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lbp
