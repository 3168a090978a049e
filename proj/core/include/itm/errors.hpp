#pragma once

#include <stdexcept>
#include <string>

namespace itm {

// Ways a piecewise translation can fail validation.
enum class MapError {
  ArityMismatch,
  UnsortedBreakpoints,
  ZeroLengthInterval,
  ZeroTranslation,
  ImageEscapesDomain,
};

// Stable identifier for a validation failure, e.g. "zero-translation".
std::string to_string(MapError kind);

// Thrown when raw map data violates an invariant.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(MapError kind, const std::string& detail);
  MapError kind() const noexcept { return kind_; }

 private:
  MapError kind_;
};

// Thrown when an operation is applied outside its stated preconditions.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what_arg);
};

// Thrown when an iteration cap runs out before an answer is certain; never
// a claim about the input, only about the budget.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what_arg, long long budget_spent);
  long long budget_spent() const noexcept { return budget_spent_; }

 private:
  long long budget_spent_;
};

// Thrown when recorded reconstruction data does not fit together.
class InconsistencyError : public std::runtime_error {
 public:
  explicit InconsistencyError(const std::string& what_arg);
};

}  // namespace itm
