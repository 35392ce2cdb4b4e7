#include <cmath>
#include <complex>

#include "hgf_internal.hpp"
#include "hgfae/error.hpp"
#include "hgfae/hgf.hpp"
#include "hgfae/quadrature.hpp"

namespace hgfae::hgf {

using namespace detail;

namespace {

constexpr long kGuard = 24;

BigComplex pos_pow(const Real& x, const BigComplex& e) { return exp(e * log(x)); }

// Continuous logarithm of w(phi) along phi, anchored at the principal value
// at phi0. The unwrapping is done in double precision.
class LogTracker {
 public:
  LogTracker(std::function<std::complex<double>(double)> w, double phi0) : w_(std::move(w)), phi0_(phi0) {}

  BigComplex log_at(double phi, const BigComplex& w_hp) const {
    const double step = 2.0 * M_PI / 4096.0;
    double u = std::arg(w_(phi0_));
    double x = phi0_;
    double dir = phi >= phi0_ ? 1.0 : -1.0;
    while (dir * (phi - x) > 0) {
      double nx = dir > 0 ? std::min(phi, x + step) : std::max(phi, x - step);
      double d = std::arg(w_(nx)) - std::arg(w_(x));
      d -= 2.0 * M_PI * std::round(d / (2.0 * M_PI));
      u += d;
      x = nx;
    }
    BigComplex l = log(w_hp);
    double k = std::round((u - l.im().to_double()) / (2.0 * M_PI));
    if (k != 0) l += BigComplex(Real(0, l.bits()), Real::pi(l.bits()) * (2.0 * k));
    return l;
  }

 private:
  std::function<std::complex<double>(double)> w_;
  double phi0_;
};

struct Prepared {
  BigComplex a, b, c, z;
  long bits;
};

Prepared prepare(const HgfInput& in, const Precision& prec) {
  long bits = prec.bits + kGuard;
  return {in.a.with_bits(bits), in.b.with_bits(bits), in.c.with_bits(bits), in.z.with_bits(bits), bits};
}

bool b_polynomial(const HgfInput& in) { return in.b.is_nonpositive_integer(); }

// 1/z on the real segment [lo, hi] of the path
bool pole_on_segment(const HgfInput& in, double lo, double hi) {
  if (in.z.is_zero() || b_polynomial(in)) return false;
  if (!in.z.im().is_zero()) return false;
  double t = 1.0 / in.z.re().to_double();
  return t >= lo && t <= hi;
}

EvalOutcome euler_integral(const HgfInput& in, const Precision& prec) {
  Prepared p = prepare(in, prec);
  Precision qp = prec;
  qp.bits = p.bits;
  BigComplex am1 = p.a - 1.0, s = p.c - p.a - 1.0;
  auto f = [&](const Real& t, const Real& one_minus_t) {
    BigComplex v = pos_pow(t, am1) * pos_pow(one_minus_t, s);
    if (!p.b.is_zero()) v *= exp(-p.b * log(1.0 - p.z * t));
    return v;
  };
  QuadResult q = tanh_sinh(f, Real(0, p.bits), Real(1, p.bits), qp);
  BigComplex pre = gamma_ratio({p.c}, {p.a, p.c - p.a}, p.bits);
  EvalOutcome out;
  out.value = (q.value * pre).with_bits(prec.bits);
  out.method = Method::QuadratureA;
  out.est_rel_error = max(q.est_rel_error, epsilon(prec.bits)).with_bits(prec.bits);
  if (!q.converged) fail(ErrorCode::NonConvergent, "Euler integral quadrature did not converge");
  return out;
}

}  // namespace

EvalOutcome hgf_quadrature_A(const HgfInput& in, const Precision& prec) {
  prec.validate();
  if (!(in.a.re() > 0 && in.c.re() > in.a.re()))
    fail(ErrorCode::ParameterDomain, "Euler integral requires Re c > Re a > 0");
  if (on_cut(in.z) && !b_polynomial(in)) fail(ErrorCode::SingularityOnPath, "1/z lies on (0, 1)");
  if (in.z.is_real() && in.z.re() == 1 && !b_polynomial(in))
    fail(ErrorCode::SingularityOnPath, "1/z is the endpoint t = 1");
  return euler_integral(in, prec);
}

EvalOutcome hgf_quadrature_loop(const HgfInput& in, LoopVariant variant, const Precision& prec,
                                const LoopConfig& cfg) {
  prec.validate();
  if (!(cfg.radius > 0 && cfg.radius < 1)) fail(ErrorCode::ParameterDomain, "loop radius must lie in (0, 1)");
  double r = cfg.radius;
  bool is_b = variant == LoopVariant::B;
  if (is_b && !(in.a.re() > 0)) fail(ErrorCode::ParameterDomain, "loop B requires Re a > 0");
  if (!is_b && !((in.c - in.a).re() > 0)) fail(ErrorCode::ParameterDomain, "loop C requires Re(c - a) > 0");

  std::complex<double> zd = in.z.to_cd();
  std::complex<double> center = is_b ? 1.0 : 0.0;
  if (!in.z.is_zero() && !b_polynomial(in) && std::abs(1.0 / zd - center) <= r)
    fail(ErrorCode::ContourEnclosesCriticalPoint, "1/z lies inside the loop");
  if (is_b ? pole_on_segment(in, 0.0, 1.0 - r) : pole_on_segment(in, r, 1.0))
    fail(ErrorCode::SingularityOnPath, "1/z lies on the straight part of the loop");

  // integer exponent on the encircled point: the loop degenerates and its
  // limit is the Euler integral
  if (is_b ? (in.c - in.a).is_integer() && (in.c - in.a).re() > 0 : in.a.is_integer() && in.a.re() > 0)
    return euler_integral(in, prec);

  Prepared p = prepare(in, prec);
  Precision qp = prec;
  qp.bits = p.bits;
  long bits = p.bits;
  BigComplex am1 = p.a - 1.0, s = p.c - p.a - 1.0;
  Real rr(r, bits);
  BigComplex I = BigComplex::i(bits);
  BigComplex two_pi_i = I * (Real::pi(bits) * 2);
  auto pow_1mzt = [&](const BigComplex& t) {
    if (p.b.is_zero()) return BigComplex(Real(1, bits));
    return exp(-p.b * log(1.0 - p.z * t));
  };

  BigComplex segment, jump, circle_val;
  QuadResult seg_q, circ_q;
  if (is_b) {
    auto f = [&](const Real& t, const Real& to_hi) {
      return pos_pow(t, am1) * pos_pow(rr + to_hi, s) * pow_1mzt(BigComplex(t));
    };
    seg_q = tanh_sinh(f, Real(0, bits), Real(1, bits) - rr, qp);
    // arg(t - 1) = -pi going out, +pi coming back
    jump = exp_i_pi(-s) - exp_i_pi(s);
    LogTracker track([&](double phi) { return 1.0 - zd * (1.0 + r * std::exp(std::complex<double>(0, phi))); }, -M_PI);
    auto g = [&](const Real& phi) {
      BigComplex e = BigComplex::polar(Real(1, bits), phi);
      BigComplex t = 1.0 + e * rr;
      BigComplex v = pos_pow(rr, s) * exp(s * I * phi) * exp(am1 * log(t)) * I * rr * e;
      if (!p.b.is_zero()) v *= exp(-p.b * track.log_at(phi.to_double(), 1.0 - p.z * t));
      return v;
    };
    circ_q = gauss_legendre_adaptive(g, -Real::pi(bits), Real::pi(bits), qp);
  } else {
    auto f = [&](const Real& from_lo, const Real& to_hi) {
      Real t = rr + from_lo;
      return pos_pow(t, am1) * pos_pow(to_hi, s) * pow_1mzt(BigComplex(t));
    };
    seg_q = tanh_sinh(f, rr, Real(1, bits), qp);
    // arg t = 0 going in, 2 pi coming back
    jump = exp(two_pi_i * am1) - 1.0;
    auto g = [&](const Real& phi) {
      BigComplex e = BigComplex::polar(Real(1, bits), phi);
      BigComplex t = e * rr;
      BigComplex v = pos_pow(rr, am1) * exp(am1 * I * phi) * exp(s * log(1.0 - t)) * pow_1mzt(t) * I * rr * e;
      return v;
    };
    circ_q = gauss_legendre_adaptive(g, Real(0, bits), Real::pi(bits) * 2, qp);
  }
  if (!seg_q.converged || !circ_q.converged) fail(ErrorCode::NonConvergent, "loop quadrature did not converge");
  segment = seg_q.value * jump;
  circle_val = circ_q.value;
  BigComplex total = segment + circle_val;
  BigComplex pre;
  if (is_b) {
    pre = gamma_ratio({p.a - p.c + 1.0, p.c}, {p.a}, bits) / two_pi_i;
  } else {
    pre = exp_i_pi(-p.a) * gamma_ratio({1.0 - p.a, p.c}, {p.c - p.a}, bits) / two_pi_i;
  }
  EvalOutcome out;
  out.value = (total * pre).with_bits(prec.bits);
  out.method = is_b ? Method::QuadratureLoopB : Method::QuadratureLoopC;
  Real mag = abs(total);
  Real err = abs(segment) * seg_q.est_rel_error + abs(circle_val) * circ_q.est_rel_error;
  out.est_rel_error = max(mag.is_zero() ? err : err / mag, epsilon(prec.bits)).with_bits(prec.bits);
  return out;
}

}  // namespace hgfae::hgf
