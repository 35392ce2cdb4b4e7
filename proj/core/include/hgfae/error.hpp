#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hgfae {

enum class ErrorCode {
  PoleAtNonPositiveInteger,
  BelowThreshold,
  InvalidPrecision,
  NonConvergent,
  UndefinedC,
  DivergesAtOne,
  DegenerateConnection,
  ParameterDomain,
  SingularityOnPath,
  ContourEnclosesCriticalPoint,
  OnBranchCut,
  AtSingularity,
  HigherOrderSaddle,
  StallNearSingularity,
  PathSingularity,
  DomainViolation,
  NearCriticalZ,
  AtOne,
  DegenerateTransformation,
  CoalescentSaddles,
  RealInputsUseDominant,
  NearExcludedPoint,
  ExcludedPoint,
  SizeGuard,
  ComplementRequired,
  RegimeGuard,
  ExcludedZ,
  ReferenceZero,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Non-fatal condition attached to a result.
struct Warning {
  ErrorCode code;
  std::string message;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace hgfae
