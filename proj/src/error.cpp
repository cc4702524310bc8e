#include "hollowlat/error.hpp"

namespace hollowlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::MeetOrJoinMissing: return "MeetOrJoinMissing";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::ZeroSubmodule: return "ZeroSubmodule";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::StepFailed: return "StepFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace hollowlat
