#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fotensor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position()` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A predicate was used with an argument count it does not accept.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A word contains a character outside the alphabet, or an alphabet is ill-formed.
class SymbolError : public Error {
 public:
  using Error::Error;
};

class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(const std::string& variable)
      : Error("unbound variable '" + variable + "'"), variable_(variable) {}
  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

class UnknownPredicateError : public Error {
 public:
  explicit UnknownPredicateError(const std::string& predicate)
      : Error("unknown predicate '" + predicate + "'"), predicate_(predicate) {}
  const std::string& predicate() const { return predicate_; }

 private:
  std::string predicate_;
};

/// Structure construction or structure document problems.
class StructureError : public Error {
 public:
  enum class Kind { kMalformed, kOutOfRange, kNonBinaryEntry, kDuplicate, kInvalidDomain };

  StructureError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A tensor evaluation produced a truth value outside {0, 1}.
class ClosureViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fotensor
