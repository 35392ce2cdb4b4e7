#pragma once

#include "hgfae/asym.hpp"

namespace hgfae::ab {

struct AbSaddles {
  BigComplex t_plus, t_minus;
  BigComplex sigma_reg;  // sqrt((1-eps)^2 + 4 eps / z), finite at eps = 1
  Real eps;
  BigComplex z;
};

// t_pm = ((1 - eps) +- sigma_reg) / 2 with the principal root.
AbSaddles saddle_points_ab(const Real& eps, const BigComplex& z);

struct AbConfig {
  double near_one = 0.02;  // warn when |z - 1| is below this
  double large_z = 1e6;    // warn above this |z| when eps < 1
};

// Both saddles; needs Im z != 0 and Im lam != 0. The t_minus term carries
// the factor -i sgn(Im lam) from the direction of its descent path.
AeResult ae_ab_complex(const AsymCase& c, const BigComplex& z, const AbConfig& cfg = {});

// t_plus only; real lam or real z, any z except 1.
AeResult ae_ab_dominant(const AsymCase& c, const BigComplex& z, const AbConfig& cfg = {});

// F(a - eps lam, b - lam; c; z) from the dominant saddle t_minus of the
// reflected phase. Expects eps1 < 0, eps2 = -1, eps3 = 0.
AeResult ae_ab_negative(const AsymCase& c, const BigComplex& z, const AbConfig& cfg = {});

// Relative gap between the two sides of the t_minus / t_plus power identity
// used to fold z > 1 into the dominant formula.
Real tpm_identity_gap(const AsymCase& c, const BigComplex& z);

// sqrt(2 / (n pi sin theta)) cos((n + 1/2) theta - pi/4)
Real legendre_laplace(unsigned long n, const Real& theta);

}  // namespace hgfae::ab
