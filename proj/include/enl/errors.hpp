#pragma once

#include <stdexcept>
#include <string>

namespace enl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Malformed parameters or an inconsistent declaration.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A node or operand that does not belong to the graph it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOracleError : public Error {
 public:
  using Error::Error;
};

/// The declared sequence classes do not determine the answer.
/// Distinct from a FilterDependent verdict, which is a determined answer.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// A theorem's hypothesis does not hold for the given input.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

class UnreachableError : public Error {
 public:
  using Error::Error;
};

class NotAHyperbranchError : public Error {
 public:
  NotAHyperbranchError(const std::string& what, bool filter_dependent)
      : Error(what), filter_dependent_(filter_dependent) {}
  bool filter_dependent() const { return filter_dependent_; }

 private:
  bool filter_dependent_;
};

}  // namespace enl
