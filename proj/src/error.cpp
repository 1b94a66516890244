#include "heunpot/error.hpp"

namespace heunpot {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::FuchsianViolation: return "FuchsianViolation";
    case ErrorKind::DegenerateSingularity: return "DegenerateSingularity";
    case ErrorKind::GammaNonPositiveInteger: return "GammaNonPositiveInteger";
    case ErrorKind::OutsideConvergenceDomain: return "OutsideConvergenceDomain";
    case ErrorKind::SlowConvergence: return "SlowConvergence";
    case ErrorKind::TooCloseToSingularity: return "TooCloseToSingularity";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ZeroRho: return "ZeroRho";
    case ErrorKind::ZeroDerivative: return "ZeroDerivative";
    case ErrorKind::UnsupportedDegenerateCase: return "UnsupportedDegenerateCase";
    case ErrorKind::SingularMobius: return "SingularMobius";
    case ErrorKind::PoleCrossing: return "PoleCrossing";
    case ErrorKind::SingularityCollar: return "SingularityCollar";
    case ErrorKind::StepLimit: return "StepLimit";
    case ErrorKind::NonFiniteCoefficient: return "NonFiniteCoefficient";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace heunpot
