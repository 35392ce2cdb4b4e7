#pragma once

#include <functional>
#include <vector>

#include "hgfae/complex.hpp"
#include "hgfae/precision.hpp"

namespace hgfae {

struct QuadResult {
  BigComplex value;
  Real est_rel_error;
  int levels = 0;
  long evaluations = 0;
  bool converged = false;
};

// Integrand evaluated through its distances to both interval ends, so that
// factors like (x - lo)^p (hi - x)^q keep full relative accuracy near the
// endpoints: x = lo + from_lo = hi - to_hi.
using EndpointIntegrand = std::function<BigComplex(const Real& from_lo, const Real& to_hi)>;
using PointIntegrand = std::function<BigComplex(const Real& x)>;

// Double-exponential quadrature on [lo, hi]; step halves until two levels
// agree to prec.quadrature_tolerance.
QuadResult tanh_sinh(const EndpointIntegrand& f, const Real& lo, const Real& hi, const Precision& prec,
                     int max_levels = 12);

struct GaussRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

// n-point Gauss-Legendre rule with nodes found by Newton iteration.
GaussRule gauss_legendre_rule(int n, long bits);

// Composite Gauss-Legendre with recursive bisection until a panel and its
// two halves agree.
QuadResult gauss_legendre_adaptive(const PointIntegrand& f, const Real& lo, const Real& hi, const Precision& prec,
                                   int order = 24, int max_depth = 30);

}  // namespace hgfae
