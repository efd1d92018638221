#pragma once

#include <stdexcept>
#include <string>

namespace szego {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: precision below the floor, non-positive tolerance, bad node counts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The Laguerre parameter lies in the integer set {-n, ..., -1}.
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidSchedule : public Error {
 public:
  using Error::Error;
};

/// A potential was requested at one of the measure's atoms.
class SingularEvaluation : public Error {
 public:
  using Error::Error;
};

/// A supplied interior/exterior test point is on the wrong side of the curve.
class InvalidTestPoint : public Error {
 public:
  using Error::Error;
};

/// Level-curve continuation failed.
class TraceError : public Error {
 public:
  using Error::Error;
};

}  // namespace szego
