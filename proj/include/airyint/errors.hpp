#pragma once

#include <stdexcept>
#include <string>

namespace airyint {

enum class ErrorKind {
  NonFinite,           // non-finite argument
  OverflowDomain,      // argument outside |x| <= 50
  ShiftMismatch,       // exact shifts of two operands disagree
  EqualShifts,         // distinct-shift route called with a == b
  NonConvergence,      // quadrature evaluation budget exhausted
  NonFiniteIntegrand,
  DivergentIntegrand,  // improper limit with a Bi component
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace airyint
