#pragma once

#include <stdexcept>
#include <string>

namespace rrw {

/// Exact integer arithmetic left the 64-bit range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A denominator factor (1 - mu q^e) with e < 1.
class InvalidFactor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A partition was handed to an operation whose class it does not belong to.
class NotInClass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter binding fails the admissibility predicate of a catalog entry.
class ParameterDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lookup of a catalog or statement id that does not exist.
class UnknownId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial, partition, or problem-file text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A difference-side partition is not claimed by any case rule.
class ClassificationGap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A difference-side partition is assigned two different signatures.
class AmbiguousClassification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table was requested for a size at which some signature class has
/// more than one member on a side.
class NonsingletonClass : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rrw
