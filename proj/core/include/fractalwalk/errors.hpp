#pragma once

#include <stdexcept>
#include <string>

namespace fractalwalk {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A request exceeded a hard resource or representability limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A discretization cannot meet its stated tolerance for the given inputs.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// A computation produced a non-finite intermediate value.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace fractalwalk
