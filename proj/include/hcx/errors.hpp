#pragma once

#include <stdexcept>
#include <string>

namespace hcx {

/// Caller supplied malformed input (shape mismatch, violated precondition).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction whose existence is guaranteed by theory failed; this means
/// a convention bug in the builder, not bad input.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A floating-point routine left its domain of validity (e.g. matrix log
/// near the branch cut).
class NumericalDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hcx
