#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heunpot {

using cplx = std::complex<double>;

enum class ErrorKind {
  FuchsianViolation,
  DegenerateSingularity,
  GammaNonPositiveInteger,
  OutsideConvergenceDomain,
  SlowConvergence,
  TooCloseToSingularity,
  DomainError,
  ZeroRho,
  ZeroDerivative,
  UnsupportedDegenerateCase,
  SingularMobius,
  PoleCrossing,
  SingularityCollar,
  StepLimit,
  NonFiniteCoefficient,
  GridTooCoarse,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace heunpot
