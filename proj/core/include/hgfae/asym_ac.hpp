#pragma once

#include <string>
#include <vector>

#include "hgfae/asym.hpp"

namespace hgfae::ac {

struct AcConfig {
  // exclusion radius around z = 1/eps, in units of 1/eps
  double exclusion = 0.05;
};

// 1 + a0 b0 z / (c0 + lam), for eps1 = eps2 = 0, eps3 = 1.
AeResult ae_large_c_only(const AsymCase& c, const BigComplex& z);

// (1 - eps z)^(-b0) for 0 < eps1 < 1. Near 1/eps the value carries a
// NearCriticalZ warning.
AeResult ae_ac_leading(const AsymCase& c, const BigComplex& z, const AcConfig& cfg = {});

// (1/(eps^eps |x|)) |(x - 1)/(1 - eps)|^(1 - eps)
Real h_eps(const Real& eps, const Real& x);
// (1/(eps^eps z)) ((eps - 1)/(1 - z))^(eps - 1), principal powers
BigComplex h_eps(const Real& eps, const BigComplex& z);

// Large-lambda residue of f e^(lam g) at t = 1/z, eps1 > 1, b0 in N.
BigComplex residue_asym(const AsymCase& c, const BigComplex& z);

// Exact residue through the finite Leibniz sum, b0 in N.
BigComplex residue_exact(const AsymCase& c, const BigComplex& z);

// Leading term plus the pole/branch term for eps1 > 1; the second term is
// kept only for |z| > 1/eps.
AeResult ae_ac_full(const AsymCase& c, const BigComplex& z, const AcConfig& cfg = {});

// One piece of a reduced evaluation: multiplier * F(piece.c at piece.z).
struct ReducedTerm {
  AsymCase c;
  BigComplex z;
  BigComplex multiplier;
};

struct Reduction {
  std::vector<ReducedTerm> terms;  // original = sum of multiplier * F
  std::string recipe;
};

// Maps (eps3 = +-1, any sign of eps1, eps2 = 0) to sums of cases with
// eps1 >= 0 and eps3 = 1. Throws DegenerateTransformation when the
// connection formula needs c - a - b or c at an integer.
Reduction reduce_negative_eps(const AsymCase& c, const BigComplex& z);

BigComplex evaluate_reduction(const Reduction& r, const Precision& prec = default_precision());

}  // namespace hgfae::ac
