#include "hgfae/asym_ab.hpp"

#include <sstream>

#include "hgfae/gamma.hpp"

namespace hgfae::ab {

namespace {

void require_ab(const AsymCase& c, int sign) {
  validate_case(c);
  if (!c.eps3.is_zero() || c.eps2 != sign) fail(ErrorCode::ParameterDomain, "expected the (eps, 1, 0) family");
  if (sign > 0 ? !(c.eps1 > 0) : !(c.eps1 < 0)) fail(ErrorCode::ParameterDomain, "eps has the wrong sign");
}

void check_z(const BigComplex& z) {
  if (z == BigComplex(1)) fail(ErrorCode::ExcludedPoint, "z = 1 is excluded");
}

std::optional<Warning> z_warning(const Real& eps, const BigComplex& z, const AbConfig& cfg) {
  if (abs(z - 1.0) < cfg.near_one) return Warning{ErrorCode::NearExcludedPoint, "z is close to 1"};
  if (eps < 1 && abs(z) > cfg.large_z) return Warning{ErrorCode::NearExcludedPoint, "|z| is large with eps < 1"};
  return std::nullopt;
}

// log of Gamma(c) (eps lam)^(1/2 - c) / sqrt(2 pi sigma)
BigComplex log_prefactor(const AsymCase& c, const Real& eps, const AbSaddles& s) {
  long bits = c.lam.bits();
  Real two_pi = Real::pi(bits) * 2;
  return log_gamma(c.c0) + (0.5 - c.c0) * log(eps * c.lam) - (BigComplex(log(two_pi)) + log(s.sigma_reg)) / 2.0;
}

// t^(a + eps lam) (t - 1)^(c - a - eps lam) (1 - z t)^(-b - lam), as a log
BigComplex log_saddle_term(const AsymCase& c, const BigComplex& z, const BigComplex& t) {
  BigComplex A = c.a0 + c.eps1 * c.lam;
  return A * log(t) + (c.c0 - A) * log(t - 1.0) - (c.b0 + c.lam) * log(1.0 - z * t);
}

}  // namespace

AbSaddles saddle_points_ab(const Real& eps, const BigComplex& z) {
  if (!(eps > 0)) fail(ErrorCode::ParameterDomain, "saddles require eps > 0");
  if (z.is_zero()) fail(ErrorCode::ParameterDomain, "saddles require z != 0");
  Real om = 1.0 - eps;
  BigComplex disc = BigComplex(om * om) + 4.0 * eps / z;
  if (disc.is_zero()) fail(ErrorCode::CoalescentSaddles, "saddles coalesce at z = -4 eps / (eps - 1)^2");
  BigComplex s = sqrt(disc);
  AbSaddles out;
  out.sigma_reg = s;
  out.t_plus = (BigComplex(om) + s) / 2.0;
  out.t_minus = (BigComplex(om) - s) / 2.0;
  out.eps = eps;
  out.z = z;
  return out;
}

AeResult ae_ab_complex(const AsymCase& c, const BigComplex& z, const AbConfig& cfg) {
  require_ab(c, 1);
  if (z.im().is_zero() || c.lam.im().is_zero())
    fail(ErrorCode::RealInputsUseDominant, "two-saddle form needs complex z and complex lambda");
  AbSaddles s = saddle_points_ab(c.eps1, z);
  BigComplex pre = log_prefactor(c, c.eps1, s);
  BigComplex tp = exp(pre + log_saddle_term(c, z, s.t_plus));
  BigComplex tm = exp(pre + log_saddle_term(c, z, s.t_minus));
  // orientation of the descent path through t_minus relative to t_plus
  BigComplex turn = BigComplex::i(tm.bits()) * (c.lam.im().sign() > 0 ? -1.0 : 1.0);
  tm = tm * turn;
  AeResult out;
  out.regime = Regime::AbComplex;
  out.terms.emplace_back("t_plus", tp);
  out.terms.emplace_back("t_minus", tm);
  out.value = tp + tm;
  out.warning = z_warning(c.eps1, z, cfg);
  return out;
}

AeResult ae_ab_dominant(const AsymCase& c, const BigComplex& z, const AbConfig& cfg) {
  require_ab(c, 1);
  check_z(z);
  if (!z.im().is_zero() && !c.lam.im().is_zero())
    fail(ErrorCode::ParameterDomain, "complex z with complex lambda needs both saddles");
  AbSaddles s = saddle_points_ab(c.eps1, z);
  BigComplex v = exp(log_prefactor(c, c.eps1, s) + log_saddle_term(c, z, s.t_plus));
  AeResult out;
  out.regime = Regime::AbDominant;
  out.terms.emplace_back("t_plus", v);
  out.value = v;
  out.warning = z_warning(c.eps1, z, cfg);
  return out;
}

AeResult ae_ab_negative(const AsymCase& c, const BigComplex& z, const AbConfig& cfg) {
  require_ab(c, -1);
  check_z(z);
  Real eps = -c.eps1;
  AbSaddles s = saddle_points_ab(eps, z);
  const BigComplex& t = s.t_minus;
  BigComplex el = eps * c.lam;
  BigComplex l = log_prefactor(c, eps, s) + (c.c0 - c.a0 + el) * log(1.0 - t) + (c.a0 - el) * log(-t) +
                 (c.lam - c.b0) * log(1.0 - z * t);
  BigComplex v = exp(l);
  AeResult out;
  out.regime = Regime::AbNegative;
  out.terms.emplace_back("t_minus", v);
  out.value = v;
  out.warning = z_warning(eps, z, cfg);
  return out;
}

Real tpm_identity_gap(const AsymCase& c, const BigComplex& z) {
  require_ab(c, 1);
  AbSaddles s = saddle_points_ab(c.eps1, z);
  const BigComplex& a = c.a0;
  const BigComplex& b = c.b0;
  const BigComplex& cc = c.c0;
  BigComplex el = c.eps1 * c.lam;
  const BigComplex& tm = s.t_minus;
  BigComplex lhs = (cc - a - el) * log(-tm) + (a + el) * log(1.0 - tm) - (cc - b - c.lam) * log(1.0 - z * tm) -
                   (a + b - cc + (c.eps1 + 1.0) * c.lam) * log(1.0 - z);
  BigComplex rhs = log_saddle_term(c, z, s.t_plus);
  BigComplex L = exp(lhs), R = exp(rhs);
  return abs(L - R) / abs(R);
}

Real legendre_laplace(unsigned long n, const Real& theta) {
  long bits = theta.bits();
  Real pi = Real::pi(bits);
  if (n < 1 || !(theta > 0) || !(theta < pi)) fail(ErrorCode::DomainViolation, "needs n >= 1 and 0 < theta < pi");
  Real nn(static_cast<double>(n), bits);
  return sqrt(2.0 / (nn * pi * sin(theta))) * cos((nn + 0.5) * theta - pi / 4);
}

}  // namespace hgfae::ab
