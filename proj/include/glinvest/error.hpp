#pragma once

#include <stdexcept>
#include <string>

namespace glinvest {

/// Base of every error the library raises. The CLI maps all of them to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside its admissible domain (negative investment, v > 1, beta < 1, ...).
/// The message names the offending field.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arguments are individually valid but inconsistent with each other
/// (plan length vs. horizon, unequal comparison windows, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine produced a non-finite value.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario document. Syntax errors carry a line/column position,
/// schema errors carry a field path such as `periods[2].beta`.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace glinvest
