#pragma once

#include <stdexcept>
#include <string>

namespace isospec {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplicity pair or family violates one of the structural constraints.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested case exists mathematically but is not handled here.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An integral whose integrand is not integrable at an endpoint.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A base point lies too close to a focal submanifold for the requested operation.
class NearFocalError : public Error {
 public:
  using Error::Error;
};

/// The neighbourhood graph of a point cloud is disconnected.
class ConnectivityError : public Error {
 public:
  using Error::Error;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace isospec
