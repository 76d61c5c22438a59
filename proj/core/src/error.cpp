#include "illab/error.hpp"

namespace illab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::DegenerateDirections: return "DegenerateDirections";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::CapTooSmall: return "CapTooSmall";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnstableShape: return "UnstableShape";
    case ErrorKind::IllConditionedGrid: return "IllConditionedGrid";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::SanityViolation: return "SanityViolation";
    case ErrorKind::ExtraCommonZeros: return "ExtraCommonZeros";
    case ErrorKind::NotConverging: return "NotConverging";
    case ErrorKind::OriginSingularity: return "OriginSingularity";
    case ErrorKind::ZeroOnSphere: return "ZeroOnSphere";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::Numeric: return "NumericFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace illab
