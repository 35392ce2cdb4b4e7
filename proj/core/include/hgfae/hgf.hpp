#pragma once

#include <string>

#include "hgfae/complex.hpp"
#include "hgfae/precision.hpp"

namespace hgfae::hgf {

enum class Method {
  Series,
  PfaffContinuation,
  ConnectionFormula,
  TerminatingPolynomial,
  QuadratureA,
  QuadratureLoopB,
  QuadratureLoopC,
  OdeContinuation,
};

const char* to_string(Method m);

// Which limit is taken for real z > 1. Below is z - i0, where
// arg(1 - z) = +pi, the value reached by principal powers of (1 - z).
enum class CutSide { Below, Above };

struct HgfInput {
  BigComplex a, b, c, z;
  // For real z >= 1 the caller asserts arg z = 0 (required).
  bool on_cut_arg_zero = true;
  CutSide cut_side = CutSide::Below;
};

HgfInput make_input(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& z);

struct EvalOutcome {
  BigComplex value;
  Method method = Method::Series;
  Real est_rel_error;
};

struct EvalConfig {
  // Plain series inside this radius, then the Pfaff map, then connections.
  double r0 = 0.75;
  // Largest convergence ratio accepted for any series route before the ODE
  // continuation takes over.
  double max_ratio = 0.9;
};

// Partial sums of the defining series. Terminating cases are summed exactly
// to the last nonzero term for any z.
EvalOutcome hgf_series(const HgfInput& in, const Precision& prec = default_precision());

// Analytic continuation on the principal branch with route dispatch.
EvalOutcome hgf_eval(const HgfInput& in, const Precision& prec = default_precision(), const EvalConfig& cfg = {});

// Normalised residual of the hypergeometric ODE using central differences
// of step h around z.
Real hgf_ode_residual(const HgfInput& in, const Real& h, const Precision& prec = default_precision());

// Euler integral over [0, 1].
EvalOutcome hgf_quadrature_A(const HgfInput& in, const Precision& prec = default_precision());

enum class LoopVariant { B, C };

struct LoopConfig {
  double radius = 0.45;
};

// Loop integrals: B encircles t = 1 starting from t = 0, C encircles t = 0
// starting from t = 1.
EvalOutcome hgf_quadrature_loop(const HgfInput& in, LoopVariant variant, const Precision& prec = default_precision(),
                                const LoopConfig& cfg = {});

// First Pfaff transformation applied once: returns (1-z)^(-b) and the input
// (c-a, b, c, z/(z-1)).
struct PfaffImage {
  HgfInput input;
  BigComplex multiplier;
};
PfaffImage pfaff(const HgfInput& in);

// Euler transformation (1-z)^(c-a-b) F(c-a, c-b; c; z) evaluated through
// hgf_eval.
EvalOutcome hgf_euler(const HgfInput& in, const Precision& prec = default_precision());

}  // namespace hgfae::hgf
