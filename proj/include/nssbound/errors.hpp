#pragma once

#include <stdexcept>
#include <string>

namespace nssbound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition (normalisation, range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit (photon cap, polynomial order) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is undefined for the input (zero norm, 0/0, ...).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The conditional space has fewer dimensions than the formula requires.
class RankDeficientError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

/// |1 + 2 L11 - L11^2| vanishes, so the network formula is singular.
class SingularNetworkError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

}  // namespace nssbound
