#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace fusionkit {

/// Malformed or out-of-contract arguments (bad partition text, unrestricted
/// inputs where a restricted one is required, mismatched shapes).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator was applied outside of the set it is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A crystal operator was applied to a word with no letter it can move.
class UndefinedOperator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested rule does not cover this shape (e.g. three-column mu).
class UnsupportedShape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven invariant failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("fusionkit: coefficient overflow");
  }
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("fusionkit: coefficient overflow");
  }
  return out;
}

}  // namespace fusionkit
