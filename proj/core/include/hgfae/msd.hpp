#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hgfae/complex.hpp"
#include "hgfae/precision.hpp"

namespace hgfae::msd {

// AcSmall: eps ln t + (1-eps) ln(1-t), cuts (-inf,0] and [1,inf).
// AcLarge: eps ln t + (1-eps) ln(t-1), cut (-inf,1].
// Ab:      eps ln t - eps ln(t-1) - ln(1-zt).
// AbNeg:   eps pi i - (Ab).
// Gaussian (-t^2) and Stirling (ln t - t) are test phases.
enum class PhaseKind { AcSmall, AcLarge, Ab, AbNeg, Gaussian, Stirling };

const char* to_string(PhaseKind k);

struct PhaseFunction {
  PhaseKind kind = PhaseKind::AcSmall;
  Real eps;
  BigComplex z;  // Ab and AbNeg only
};

// Throws ParameterDomain when eps violates the kind's restrictions.
PhaseFunction make_phase(PhaseKind kind, const Real& eps, const BigComplex& z = BigComplex(0));

// Throws OnBranchCut or AtSingularity.
BigComplex phase_eval(const PhaseFunction& pf, const BigComplex& t);
BigComplex phase_deriv(const PhaseFunction& pf, const BigComplex& t, int order);

// Points excluded from every path: branch points and 1/z.
std::vector<BigComplex> singular_points(const PhaseFunction& pf);

struct SaddleData {
  BigComplex t0;
  int order = 1;
  BigComplex g2;  // g^(N)(t0)
  std::vector<Real> angles;
  bool dominant = true;
};

// ((2k+1) pi - alpha) / (N+1), k = 0..N, reduced to [0, 2 pi).
std::vector<Real> steepest_angles(int order, const Real& alpha);

// Saddle data at t0 for the given lambda; order from the first nonzero
// derivative (only orders 1 and 2 are distinguished).
SaddleData make_saddle(const PhaseFunction& pf, const BigComplex& t0, const BigComplex& lam);

// Saddle of AcSmall/AcLarge at t0 = eps.
SaddleData ac_saddle(const PhaseFunction& pf, const BigComplex& lam);

enum class IntegrandKind {
  One,
  Gaussian,    // exp(-t^2)
  EulerA,      // t^(a-1) (1-t)^(c-a-1) (1-zt)^(-b)
  LoopPower,   // t^(a-1) (t-1)^(c-a-1) (1-zt)^(-b)
};

struct Integrand {
  IntegrandKind kind = IntegrandKind::One;
  BigComplex a, b, c, z;
};

BigComplex integrand_eval(const Integrand& f, const BigComplex& t);

// f(t0) sqrt(2 pi / |lam g''(t0)|) exp(lam g(t0) + i theta); theta is the
// descent angle closest to forward_dir.
BigComplex saddle_approx(const PhaseFunction& pf, const Integrand& f, const SaddleData& saddle, const BigComplex& lam,
                         double forward_dir = 0.0);

// Selected descent angle, as used by saddle_approx.
Real descent_angle(const SaddleData& saddle, double forward_dir);

struct Polyline {
  std::vector<BigComplex> points;
  std::vector<BigComplex> lam_g;  // lam g(t) at each vertex, NaN where undefined
  BigComplex lam;
  // index of the saddle within points
  std::size_t saddle_index = 0;
  bool closed_at_start = false;
  bool closed_at_end = false;
};

struct TraceConfig {
  double tolerance = 1e-30;  // on |Im(lam g) - Im(lam g(t0))|
  double step_floor = 1e-12;  // relative to arclen
  // stop once Re(lam g) has dropped this far below the saddle value
  double drop = 200.0;
};

// Level-set trace through the saddle along both descent directions. Points
// run from the end of the backward branch through t0 to the end of the
// forward branch (forward = descent angle closest to forward_dir).
Polyline sd_path_trace(const PhaseFunction& pf, const SaddleData& saddle, const BigComplex& lam, const Real& arclen,
                       const Real& step, double forward_dir = 0.0, const TraceConfig& cfg = {});

// Prepends start and appends end as straight closing segments.
Polyline close_path(const Polyline& path, const BigComplex& start, const BigComplex& end);

// Composite quadrature of f exp(lam g) along the polyline: tanh-sinh on the
// first and last segments, Gauss-Legendre elsewhere.
BigComplex sd_integrate(const PhaseFunction& pf, const Integrand& f, const Polyline& path, const BigComplex& lam,
                        const Precision& prec = default_precision());

void write_polyline_csv(std::ostream& os, const Polyline& path);

enum class Dominance { SaddleDominates, Inconclusive, CriticalDominates };

const char* to_string(Dominance d);

// Im g(1/z) for AcSmall with z = r e^(i theta).
Real dominance_f(const Real& eps, const Real& r, const Real& theta);
Real dominance_f_dr(const Real& eps, const Real& r, const Real& theta);

// Compares the critical point 1/z with the saddle eps for 0 < eps < 1.
Dominance critical_point_dominance(const Real& eps, const BigComplex& z, const Real& arg_lambda);

}  // namespace hgfae::msd
