#pragma once

#include <stdexcept>
#include <string>

namespace coxeter {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coxeter matrix is not symmetric.
struct NonSymmetricError : Error {
  using Error::Error;
};

// Coxeter matrix diagonal entries must all be 1.
struct BadDiagonalError : Error {
  using Error::Error;
};

// The diagram is not of finite type.
struct NotFiniteTypeError : Error {
  using Error::Error;
};

// Enumerated group order disagrees with the classification order; signals a
// representation or tolerance bug, never user input.
struct OrderMismatchError : Error {
  using Error::Error;
};

// A configured element or node cap would be exceeded.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Operation requires comparable elements.
struct NotComparableError : Error {
  using Error::Error;
};

// A coset was passed with the wrong maximal representative.
struct MaxMismatchError : Error {
  using Error::Error;
};

// Element notation could not be parsed or is out of range.
struct UnknownElementError : Error {
  using Error::Error;
};

// Statistic undefined on an empty graph.
struct EmptyGraphError : Error {
  using Error::Error;
};

// Bad command line or configuration.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace coxeter
