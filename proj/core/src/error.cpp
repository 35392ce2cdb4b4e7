#include "hgfae/error.hpp"

namespace hgfae {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case ErrorCode::BelowThreshold: return "BelowThreshold";
    case ErrorCode::InvalidPrecision: return "InvalidPrecision";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::UndefinedC: return "UndefinedC";
    case ErrorCode::DivergesAtOne: return "DivergesAtOne";
    case ErrorCode::DegenerateConnection: return "DegenerateConnection";
    case ErrorCode::ParameterDomain: return "ParameterDomain";
    case ErrorCode::SingularityOnPath: return "SingularityOnPath";
    case ErrorCode::ContourEnclosesCriticalPoint: return "ContourEnclosesCriticalPoint";
    case ErrorCode::OnBranchCut: return "OnBranchCut";
    case ErrorCode::AtSingularity: return "AtSingularity";
    case ErrorCode::HigherOrderSaddle: return "HigherOrderSaddle";
    case ErrorCode::StallNearSingularity: return "StallNearSingularity";
    case ErrorCode::PathSingularity: return "PathSingularity";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NearCriticalZ: return "NearCriticalZ";
    case ErrorCode::AtOne: return "AtOne";
    case ErrorCode::DegenerateTransformation: return "DegenerateTransformation";
    case ErrorCode::CoalescentSaddles: return "CoalescentSaddles";
    case ErrorCode::RealInputsUseDominant: return "RealInputsUseDominant";
    case ErrorCode::NearExcludedPoint: return "NearExcludedPoint";
    case ErrorCode::ExcludedPoint: return "ExcludedPoint";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::ComplementRequired: return "ComplementRequired";
    case ErrorCode::RegimeGuard: return "RegimeGuard";
    case ErrorCode::ExcludedZ: return "ExcludedZ";
    case ErrorCode::ReferenceZero: return "ReferenceZero";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hgfae
