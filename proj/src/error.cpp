#include "gmt/error.hpp"

namespace gmt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnboundedBall: return "UnboundedBall";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::RefinementRequired: return "RefinementRequired";
    case ErrorCode::DegenerateLevel: return "DegenerateLevel";
    case ErrorCode::InconsistentBoundary: return "InconsistentBoundary";
    case ErrorCode::BoundaryConditionViolated: return "BoundaryConditionViolated";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::RefinementFailure: return "RefinementFailure";
    case ErrorCode::NotLipschitz: return "NotLipschitz";
    case ErrorCode::NotIsometric: return "NotIsometric";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace gmt
