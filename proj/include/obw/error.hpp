#pragma once

#include <stdexcept>
#include <string>

namespace obw {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the admissible domain (t outside [a,b], p <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Adaptive integration failed to reach tolerance or hit a non-finite value.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// A subinterval carries (numerically) zero weight mass, so a mean is undefined.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Unknown registry name or malformed specification string.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace obw
