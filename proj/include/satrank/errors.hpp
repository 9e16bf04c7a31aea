#pragma once

#include <stdexcept>
#include <string>

namespace satrank {

/// Raised when an operation is called outside its documented domain
/// (non-prime characteristic, p below a lemma's bound, malformed algebra, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an exhaustive enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for input files that do not parse or do not match their schema.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace satrank
