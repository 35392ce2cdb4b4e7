#include "hgfae/hgf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "hgfae/error.hpp"
#include "hgfae/gamma.hpp"
#include "hgf_internal.hpp"

namespace hgfae::hgf {

const char* to_string(Method m) {
  switch (m) {
    case Method::Series: return "Series";
    case Method::PfaffContinuation: return "PfaffContinuation";
    case Method::ConnectionFormula: return "ConnectionFormula";
    case Method::TerminatingPolynomial: return "TerminatingPolynomial";
    case Method::QuadratureA: return "QuadratureA";
    case Method::QuadratureLoopB: return "QuadratureLoopB";
    case Method::QuadratureLoopC: return "QuadratureLoopC";
    case Method::OdeContinuation: return "OdeContinuation";
  }
  return "Unknown";
}

HgfInput make_input(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& z) {
  HgfInput in;
  in.a = a;
  in.b = b;
  in.c = c;
  in.z = z;
  return in;
}

namespace detail {

bool on_cut(const BigComplex& z) { return z.im().is_zero() && z.re() > 1; }

BigComplex log_one_minus(const BigComplex& z, const Cut& cut) {
  if (cut.on_cut) {
    Real pi = Real::pi(z.bits());
    return BigComplex(log(z.re() - 1.0), cut.sign > 0 ? pi : -pi);
  }
  return log(1.0 - z);
}

BigComplex log_minus(const BigComplex& z, const Cut& cut) {
  if (cut.on_cut) {
    Real pi = Real::pi(z.bits());
    return BigComplex(log(z.re()), cut.sign > 0 ? pi : -pi);
  }
  return log(-z);
}

std::optional<long> nonpositive_integer(const BigComplex& x) {
  if (!x.is_nonpositive_integer()) return std::nullopt;
  return -x.re().to_long();
}

double loss_bits(const Real& big, const Real& result) {
  if (big.is_zero()) return 0.0;
  if (result.is_zero()) return static_cast<double>(big.bits());
  double l = static_cast<double>(big.exponent() - result.exponent());
  return std::max(0.0, l);
}

SeriesSum sum_series(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& z,
                     const Real& tol, long max_terms) {
  long bits = std::max({a.bits(), b.bits(), c.bits(), z.bits()});
  std::optional<long> na = nonpositive_integer(a), nb = nonpositive_integer(b), nc = nonpositive_integer(c);
  std::optional<long> last;
  if (na) last = *na;
  if (nb) last = last ? std::min(*last, *nb) : *nb;
  if (nc && (!last || *last > *nc))
    fail(ErrorCode::UndefinedC, "c is a non-positive integer and the series does not terminate before it");
  SeriesSum out;
  out.value = BigComplex(Real(1, bits));
  out.max_term = Real(1, bits);
  out.terminating = last.has_value();
  if (z.is_zero()) return out;
  BigComplex term(Real(1, bits));
  int small_run = 0;
  for (long n = 0;; ++n) {
    if (last && n >= *last) break;
    double dn = static_cast<double>(n);
    BigComplex num = (a + dn) * (b + dn);
    BigComplex den = (c + dn) * (dn + 1.0);
    BigComplex ratio = num * z / den;
    term *= ratio;
    out.value += term;
    out.terms = n + 1;
    Real mag = abs(term);
    if (mag > out.max_term) out.max_term = mag;
    if (last) continue;
    if (mag <= tol * abs(out.value) && abs(ratio) < 1) {
      if (++small_run >= 3) {
        out.converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
    if (n > max_terms) fail(ErrorCode::NonConvergent, "series did not converge within the term limit");
  }
  if (last) out.converged = true;
  return out;
}

BigComplex gamma_ratio(const std::vector<BigComplex>& num, const std::vector<BigComplex>& den, long bits) {
  Precision p = Precision::with_bits(bits);
  for (const auto& d : den)
    if (d.is_nonpositive_integer()) return BigComplex(Real::zero(bits));
  BigComplex acc(Real(0, bits));
  for (const auto& n : num) {
    if (n.is_nonpositive_integer()) fail(ErrorCode::DegenerateConnection, "gamma pole in a connection coefficient");
    acc += log_gamma(n, p);
  }
  for (const auto& d : den) acc -= log_gamma(d, p);
  return exp(acc);
}

}  // namespace detail

using namespace detail;

namespace {

constexpr long kGuard = 32;
constexpr long kMaxTerms = 2000000;

struct Params {
  BigComplex a, b, c, z;
  Cut cut;
  long bits;
};

// Value with the number of bits lost to cancellation and a relative
// truncation error from approximations other than rounding.
struct Piece {
  BigComplex value;
  double loss = 0.0;
  double approx_err = 0.0;
};

Params at_bits(const HgfInput& in, long bits) {
  Params p{in.a.with_bits(bits), in.b.with_bits(bits), in.c.with_bits(bits), in.z.with_bits(bits), {}, bits};
  p.cut.on_cut = on_cut(in.z);
  p.cut.sign = in.cut_side == CutSide::Below ? 1 : -1;
  return p;
}

Piece series_piece(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& z, long bits) {
  SeriesSum s = sum_series(a, b, c, z, epsilon(bits), kMaxTerms);
  Piece p;
  p.value = s.value;
  p.loss = loss_bits(s.max_term, abs(s.value)) + std::log2(static_cast<double>(s.terms + 1));
  return p;
}

// Sum of two already-computed contributions with the cancellation between them.
Piece combine(const Piece& t1, const Piece& t2) {
  Piece out;
  out.value = t1.value + t2.value;
  Real big = abs(t1.value) + abs(t2.value);
  out.loss = std::max(t1.loss, t2.loss) + loss_bits(big, abs(out.value));
  out.approx_err = std::max(t1.approx_err, t2.approx_err);
  return out;
}

Piece scaled(Piece p, const BigComplex& factor) {
  p.value = p.value * factor;
  return p;
}

Piece route_series(const Params& p) { return series_piece(p.a, p.b, p.c, p.z, p.bits); }

Piece route_pfaff(const Params& p) {
  // prefer the form whose series terminates
  const BigComplex& a = p.a;
  const BigComplex& b = p.b;
  const BigComplex& c = p.c;
  BigComplex w = p.z / (p.z - 1.0);
  BigComplex l1mz = log_one_minus(p.z, p.cut);
  if ((c - b).is_nonpositive_integer() && !(c - a).is_nonpositive_integer())
    return scaled(series_piece(a, c - b, c, w, p.bits), exp(-a * l1mz));
  return scaled(series_piece(c - a, b, c, w, p.bits), exp(-b * l1mz));
}

Piece route_euler(const Params& p) {
  BigComplex l1mz = log_one_minus(p.z, p.cut);
  return scaled(series_piece(p.c - p.a, p.c - p.b, p.c, p.z, p.bits), exp((p.c - p.a - p.b) * l1mz));
}

Piece route_one_minus_z(const Params& p) {
  const BigComplex &a = p.a, &b = p.b, &c = p.c;
  BigComplex w = 1.0 - p.z;
  BigComplex s = c - a - b;
  BigComplex k1 = gamma_ratio({c, s}, {c - a, c - b}, p.bits);
  BigComplex k2 = gamma_ratio({c, -s}, {a, b}, p.bits);
  Piece t1, t2;
  if (!k1.is_zero()) t1 = scaled(series_piece(a, b, 1.0 - s, w, p.bits), k1);
  else t1.value = BigComplex(Real::zero(p.bits));
  if (!k2.is_zero())
    t2 = scaled(series_piece(c - a, c - b, s + 1.0, w, p.bits), k2 * exp(s * log_one_minus(p.z, p.cut)));
  else t2.value = BigComplex(Real::zero(p.bits));
  return combine(t1, t2);
}

Piece route_inv_z(const Params& p) {
  const BigComplex &a = p.a, &b = p.b, &c = p.c;
  BigComplex w = 1.0 / p.z;
  BigComplex lmz = log_minus(p.z, p.cut);
  BigComplex k1 = gamma_ratio({c, b - a}, {b, c - a}, p.bits);
  BigComplex k2 = gamma_ratio({c, a - b}, {a, c - b}, p.bits);
  Piece t1, t2;
  if (!k1.is_zero()) t1 = scaled(series_piece(a, a - c + 1.0, a - b + 1.0, w, p.bits), k1 * exp(-a * lmz));
  else t1.value = BigComplex(Real::zero(p.bits));
  if (!k2.is_zero()) t2 = scaled(series_piece(b, b - c + 1.0, b - a + 1.0, w, p.bits), k2 * exp(-b * lmz));
  else t2.value = BigComplex(Real::zero(p.bits));
  return combine(t1, t2);
}

Piece route_inv_one_minus_z(const Params& p) {
  const BigComplex &a = p.a, &b = p.b, &c = p.c;
  BigComplex w = 1.0 / (1.0 - p.z);
  BigComplex l1mz = log_one_minus(p.z, p.cut);
  BigComplex k1 = gamma_ratio({c, b - a}, {b, c - a}, p.bits);
  BigComplex k2 = gamma_ratio({c, a - b}, {a, c - b}, p.bits);
  Piece t1, t2;
  if (!k1.is_zero()) t1 = scaled(series_piece(a, c - b, a - b + 1.0, w, p.bits), k1 * exp(-a * l1mz));
  else t1.value = BigComplex(Real::zero(p.bits));
  if (!k2.is_zero()) t2 = scaled(series_piece(b, c - a, b - a + 1.0, w, p.bits), k2 * exp(-b * l1mz));
  else t2.value = BigComplex(Real::zero(p.bits));
  return combine(t1, t2);
}

Piece route_one_minus_inv_z(const Params& p) {
  const BigComplex &a = p.a, &b = p.b, &c = p.c;
  BigComplex w = 1.0 - 1.0 / p.z;
  BigComplex s = c - a - b;
  BigComplex lz = log(p.z);
  BigComplex k1 = gamma_ratio({c, s}, {c - a, c - b}, p.bits);
  BigComplex k2 = gamma_ratio({c, -s}, {a, b}, p.bits);
  Piece t1, t2;
  if (!k1.is_zero()) t1 = scaled(series_piece(a, a - c + 1.0, a + b - c + 1.0, w, p.bits), k1 * exp(-a * lz));
  else t1.value = BigComplex(Real::zero(p.bits));
  if (!k2.is_zero())
    t2 = scaled(series_piece(c - a, 1.0 - a, s + 1.0, w, p.bits),
                k2 * exp(s * log_one_minus(p.z, p.cut) + (a - c) * lz));
  else t2.value = BigComplex(Real::zero(p.bits));
  return combine(t1, t2);
}

// Taylor stepping of the hypergeometric ODE from a point of radius 1/2.
Piece route_ode(const Params& p) {
  long bits = p.bits;
  const BigComplex &a = p.a, &b = p.b, &c = p.c;
  Real tol = epsilon(bits);
  BigComplex z0 = p.z * (Real(0.5, bits) / abs(p.z));
  Piece f0 = series_piece(a, b, c, z0, bits);
  Piece f1 = series_piece(a + 1.0, b + 1.0, c + 1.0, z0, bits);
  BigComplex y = f0.value;
  BigComplex dy = f1.value * a * b / c;
  double loss = std::max(f0.loss, f1.loss);
  BigComplex w = z0;
  BigComplex apb1 = a + b + 1.0;
  BigComplex r = -(a * b);
  for (int step = 0; step < 10000; ++step) {
    BigComplex rem = p.z - w;
    Real rem_abs = abs(rem);
    if (rem_abs.is_zero()) break;
    Real d = min(abs(w), abs(1.0 - w));
    Real hmax = d / 2;
    BigComplex h = rem_abs <= hmax ? rem : rem * (hmax / rem_abs);
    BigComplex p0 = w * (1.0 - w);
    BigComplex p1 = 1.0 - w * 2.0;
    BigComplex q0 = c - apb1 * w;
    // coefficients y_n h^n kept scaled by h^n
    BigComplex cm1 = y;       // y_n h^n at n
    BigComplex cm0 = dy * h;  // at n + 1
    BigComplex sum = cm1 + cm0;
    BigComplex dsum = dy;  // sum of n y_n h^(n-1)
    Real maxt = max(abs(cm1), abs(cm0));
    Real maxd = abs(dy);
    int small = 0;
    BigComplex h2 = h * h;
    for (long n = 0; n < 200000; ++n) {
      double dn = static_cast<double>(n);
      // y_{n+2} = -[(p1 n + q0)(n+1) y_{n+1} + (-n(n-1) - (a+b+1) n + R) y_n] / (p0 (n+2)(n+1))
      BigComplex t1 = (p1 * dn + q0) * (dn + 1.0) * cm0 * h;
      BigComplex t2 = (r - apb1 * dn - dn * (dn - 1.0)) * cm1 * h2;
      BigComplex next = -(t1 + t2) / (p0 * ((dn + 2.0) * (dn + 1.0)));
      sum += next;
      BigComplex dterm = next * (dn + 2.0) / h;
      dsum += dterm;
      Real mag = abs(next);
      if (mag > maxt) maxt = mag;
      Real dmag = abs(dterm);
      if (dmag > maxd) maxd = dmag;
      if (mag <= tol * abs(sum) && dmag <= tol * abs(dsum)) {
        if (++small >= 4) break;
      } else {
        small = 0;
      }
      cm1 = cm0;
      cm0 = next;
    }
    loss = std::max({loss, loss_bits(maxt, abs(sum)), loss_bits(maxd, abs(dsum))});
    y = sum;
    dy = dsum;
    w = w + h;
    loss += 1.0;
  }
  Piece out;
  out.value = y;
  out.loss = loss;
  return out;
}

enum class Route { Series, Pfaff, OneMinusZ, InvZ, InvOneMinusZ, OneMinusInvZ, Ode };

Method method_of(Route r) {
  switch (r) {
    case Route::Series: return Method::Series;
    case Route::Pfaff: return Method::PfaffContinuation;
    case Route::Ode: return Method::OdeContinuation;
    default: return Method::ConnectionFormula;
  }
}

Piece run_route(Route r, const Params& p) {
  switch (r) {
    case Route::Series: return route_series(p);
    case Route::Pfaff: return route_pfaff(p);
    case Route::OneMinusZ: return route_one_minus_z(p);
    case Route::InvZ: return route_inv_z(p);
    case Route::InvOneMinusZ: return route_inv_one_minus_z(p);
    case Route::OneMinusInvZ: return route_one_minus_inv_z(p);
    case Route::Ode: return route_ode(p);
  }
  return {};
}

// Which parameter combination makes a connection route degenerate.
bool route_degenerate(Route r, const HgfInput& in) {
  switch (r) {
    case Route::OneMinusZ:
    case Route::OneMinusInvZ: return (in.c - in.a - in.b).is_integer();
    case Route::InvZ:
    case Route::InvOneMinusZ: return (in.a - in.b).is_integer();
    default: return false;
  }
}

EvalOutcome finish(const Piece& piece, long wb, const Precision& prec, Method m) {
  EvalOutcome out;
  out.value = piece.value.with_bits(prec.bits);
  out.method = m;
  double err_exp = piece.loss + 8.0 - static_cast<double>(wb);
  Real rounding = ldexp(Real(1, prec.bits), static_cast<long>(std::ceil(err_exp)));
  Real floor_err = epsilon(prec.bits);
  out.est_rel_error = max(max(rounding, floor_err), Real(piece.approx_err, prec.bits));
  return out;
}

// Evaluates a route, raising the working precision until the bits lost to
// cancellation are covered.
template <typename F>
EvalOutcome evaluate_with_guard(const HgfInput& in, const Precision& prec, Method m, F&& route, long extra = 0) {
  long wb = prec.bits + kGuard + extra;
  Piece piece;
  for (int iter = 0; iter < 6; ++iter) {
    piece = route(at_bits(in, wb));
    long needed = prec.bits + kGuard + extra + static_cast<long>(std::ceil(piece.loss));
    if (needed <= wb) break;
    wb = needed + 16;
  }
  return finish(piece, wb, prec, m);
}

// Averages the route at a parameter shifted by +-delta to step around a
// removable singularity of the connection coefficients.
EvalOutcome evaluate_perturbed(const HgfInput& in, const Precision& prec, Route r) {
  bool shift_a = r == Route::InvZ || r == Route::InvOneMinusZ;
  long extra = prec.bits / 2 + 16;
  Real delta = ldexp(Real(1, prec.bits + extra + kGuard), -(prec.bits / 2));
  auto route = [&](const Params& p) {
    Params lo = p, hi = p;
    if (shift_a) {
      lo.a = p.a - BigComplex(delta.with_bits(p.bits));
      hi.a = p.a + BigComplex(delta.with_bits(p.bits));
    } else {
      lo.c = p.c - BigComplex(delta.with_bits(p.bits));
      hi.c = p.c + BigComplex(delta.with_bits(p.bits));
    }
    Piece x = run_route(r, lo);
    Piece y = run_route(r, hi);
    Piece out;
    out.value = (x.value + y.value) / 2.0;
    out.loss = std::max(x.loss, y.loss);
    Real spread = abs(x.value - y.value);
    Real mag = abs(out.value);
    // first-order terms cancel; the remaining error is second order in delta
    if (!mag.is_zero()) out.approx_err = (spread / mag * delta).to_double();
    return out;
  };
  return evaluate_with_guard(in, prec, method_of(r), route, extra);
}

void validate(const HgfInput& in) {
  if (on_cut(in.z) && !in.on_cut_arg_zero)
    fail(ErrorCode::ParameterDomain, "z on the branch cut requires arg z = 0");
  if (!in.a.is_finite() || !in.b.is_finite() || !in.c.is_finite() || !in.z.is_finite())
    fail(ErrorCode::ParameterDomain, "non-finite input");
}

bool terminates(const HgfInput& in) { return in.a.is_nonpositive_integer() || in.b.is_nonpositive_integer(); }

}  // namespace

EvalOutcome hgf_series(const HgfInput& in, const Precision& prec) {
  validate(in);
  bool term = terminates(in);
  if (!term && in.c.is_nonpositive_integer()) fail(ErrorCode::UndefinedC, "c is a non-positive integer");
  if (!term && abs(in.z) >= 1) fail(ErrorCode::NonConvergent, "series requires |z| < 1");
  return evaluate_with_guard(in, prec, term ? Method::TerminatingPolynomial : Method::Series, route_series);
}

EvalOutcome hgf_euler(const HgfInput& in, const Precision& prec) {
  validate(in);
  return evaluate_with_guard(in, prec, Method::PfaffContinuation, route_euler);
}

PfaffImage pfaff(const HgfInput& in) {
  PfaffImage img;
  img.input = in;
  img.input.a = in.c - in.a;
  img.input.z = in.z / (in.z - 1.0);
  Cut cut{on_cut(in.z), in.cut_side == CutSide::Below ? 1 : -1};
  img.multiplier = exp(-in.b * log_one_minus(in.z, cut));
  // z/(z-1) lands on the cut only when z does; the side flips
  if (on_cut(img.input.z))
    img.input.cut_side = in.cut_side == CutSide::Below ? CutSide::Above : CutSide::Below;
  return img;
}

EvalOutcome hgf_eval(const HgfInput& in, const Precision& prec, const EvalConfig& cfg) {
  validate(in);
  prec.validate();
  if (terminates(in)) return hgf_series(in, prec);
  if (in.c.is_nonpositive_integer()) fail(ErrorCode::UndefinedC, "c is a non-positive integer");
  long bits = prec.bits;
  if (in.z.is_zero()) {
    EvalOutcome out;
    out.value = BigComplex(Real(1, bits));
    out.method = Method::Series;
    out.est_rel_error = Real(0, bits);
    return out;
  }
  if (in.z.is_real() && in.z.re() == 1) {
    BigComplex s = in.c - in.a - in.b;
    if (s.re() <= 0) fail(ErrorCode::DivergesAtOne, "F diverges at z = 1 when Re(c-a-b) <= 0");
    EvalOutcome out;
    long wb = bits + kGuard;
    out.value = gamma_ratio({in.c.with_bits(wb), s.with_bits(wb)}, {(in.c - in.a).with_bits(wb), (in.c - in.b).with_bits(wb)}, wb)
                    .with_bits(bits);
    out.method = Method::ConnectionFormula;
    out.est_rel_error = ldexp(Real(1, bits), -(bits - 8));
    return out;
  }
  // transformations that turn the series into a polynomial
  if ((in.c - in.a).is_nonpositive_integer() || (in.c - in.b).is_nonpositive_integer()) {
    if ((in.c - in.a).is_nonpositive_integer() && (in.c - in.b).is_nonpositive_integer())
      return evaluate_with_guard(in, prec, Method::PfaffContinuation, route_euler);
    return evaluate_with_guard(in, prec, Method::PfaffContinuation, route_pfaff);
  }

  double zabs = abs(in.z).to_double();
  if (zabs <= cfg.r0) return evaluate_with_guard(in, prec, Method::Series, route_series);
  bool cut = on_cut(in.z);
  std::complex<double> zd = in.z.to_cd();
  double pf = cut ? 1e300 : std::abs(zd / (zd - 1.0));
  if (pf <= cfg.r0) return evaluate_with_guard(in, prec, Method::PfaffContinuation, route_pfaff);

  struct Candidate {
    Route route;
    double ratio;
  };
  bool negative_real = in.z.is_real() && in.z.re() < 0;
  std::vector<Candidate> cands = {
      {Route::Series, zabs},
      {Route::Pfaff, pf},
      {Route::OneMinusZ, std::abs(1.0 - zd)},
      {Route::InvZ, 1.0 / zabs},
      {Route::InvOneMinusZ, 1.0 / std::abs(1.0 - zd)},
      {Route::OneMinusInvZ, negative_real ? 1e300 : std::abs(1.0 - 1.0 / zd)},
  };
  // fixed route order for ratios within r0, otherwise the smallest ratio
  const Candidate* best = nullptr;
  for (const auto& cnd : cands) {
    if (route_degenerate(cnd.route, in)) continue;
    if (cnd.ratio <= cfg.r0) {
      best = &cnd;
      break;
    }
  }
  if (!best) {
    for (const auto& cnd : cands) {
      if (route_degenerate(cnd.route, in) || cnd.ratio > cfg.max_ratio) continue;
      if (!best || cnd.ratio < best->ratio) best = &cnd;
    }
  }
  if (best) {
    Route r = best->route;
    return evaluate_with_guard(in, prec, method_of(r), [r](const Params& p) { return run_route(r, p); });
  }
  // degenerate connection coefficients: perturb within r0 only
  const Candidate* deg = nullptr;
  for (const auto& cnd : cands)
    if (route_degenerate(cnd.route, in) && cnd.ratio <= cfg.r0 && (!deg || cnd.ratio < deg->ratio)) deg = &cnd;
  if (deg) return evaluate_perturbed(in, prec, deg->route);
  if (cut) fail(ErrorCode::DegenerateConnection, "no convergent non-degenerate route on the cut");
  return evaluate_with_guard(in, prec, Method::OdeContinuation, route_ode);
}

Real hgf_ode_residual(const HgfInput& in, const Real& h_in, const Precision& prec) {
  long wb = prec.bits;
  Real h = h_in.with_bits(wb);
  auto at = [&](const BigComplex& z) {
    HgfInput x = in;
    x.z = z;
    return hgf_eval(x, prec).value;
  };
  BigComplex z = in.z.with_bits(wb);
  BigComplex f0 = at(z);
  BigComplex fp = at(z + BigComplex(h));
  BigComplex fm = at(z - BigComplex(h));
  BigComplex d1 = (fp - fm) / (h * 2);
  BigComplex d2 = (fp - f0 * 2.0 + fm) / (h * h);
  BigComplex t2 = z * (1.0 - z) * d2;
  BigComplex t1 = (in.c - (in.a + in.b + 1.0) * z) * d1;
  BigComplex t0 = in.a * in.b * f0;
  Real scale = abs(t2) + abs(t1) + abs(t0);
  Real res = abs(t2 + t1 - t0);
  if (scale.is_zero()) return Real(0, wb);
  return res / scale;
}

}  // namespace hgfae::hgf
