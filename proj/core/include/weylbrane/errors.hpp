#pragma once

#include <stdexcept>
#include <string>

namespace weylbrane {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular metric, non-finite derivative, integrator breakdown, vanishing
/// denominators. Anything where the numbers themselves gave out.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the range where the closed forms are real.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// A 5D metric that is not of the block form diag(g_ab(x,l), -Phi^2).
class FoliationError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unknown configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace weylbrane
