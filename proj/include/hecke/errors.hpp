#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input (CLI exit code 2).
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// An enumeration would exceed the configured desk-scale budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// c-function evaluated where two torus eigenvalues collide.
struct SingularParameter : Error {
  explicit SingularParameter(const std::string& msg) : Error(msg) {}
};

// No q1 in the scan window produced a large enough amplifier eigenvalue.
struct NoAdmissibleQ1 : Error {
  explicit NoAdmissibleQ1(const std::string& msg) : Error(msg) {}
};

// A verification assertion failed (CLI exit code 3).
struct VerificationFailure : Error {
  explicit VerificationFailure(const std::string& msg) : Error(msg) {}
};

struct CacheError : Error {
  explicit CacheError(const std::string& msg) : Error(msg) {}
};

}  // namespace hecke
