#include "hgfae/msd.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hgfae/error.hpp"
#include "hgfae/quadrature.hpp"

namespace hgfae::msd {

const char* to_string(PhaseKind k) {
  switch (k) {
    case PhaseKind::AcSmall: return "G_AC_SMALL";
    case PhaseKind::AcLarge: return "G_AC_LARGE";
    case PhaseKind::Ab: return "G_AB";
    case PhaseKind::AbNeg: return "G_AB_NEG";
    case PhaseKind::Gaussian: return "GAUSSIAN";
    case PhaseKind::Stirling: return "STIRLING";
  }
  return "?";
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::SaddleDominates: return "SaddleDominates";
    case Dominance::Inconclusive: return "Inconclusive";
    case Dominance::CriticalDominates: return "CriticalDominates";
  }
  return "?";
}

PhaseFunction make_phase(PhaseKind kind, const Real& eps, const BigComplex& z) {
  bool needs_eps = kind != PhaseKind::Gaussian && kind != PhaseKind::Stirling;
  if (needs_eps && !(eps > 0)) fail(ErrorCode::ParameterDomain, "phase function requires eps > 0");
  if ((kind == PhaseKind::AcSmall || kind == PhaseKind::AcLarge) && eps == 1)
    fail(ErrorCode::ParameterDomain, "eps = 1 is excluded for this phase function");
  if ((kind == PhaseKind::Ab || kind == PhaseKind::AbNeg) && z.is_zero())
    fail(ErrorCode::ParameterDomain, "z = 0 has no critical point");
  return PhaseFunction{kind, eps, z};
}

namespace {

bool real_in(const BigComplex& t, double lo, double hi) {
  return t.im().is_zero() && t.re() >= lo && t.re() <= hi;
}

bool is_point(const BigComplex& t, const BigComplex& p) { return (t - p).is_zero(); }

void check_domain(const PhaseFunction& pf, const BigComplex& t) {
  const double inf = HUGE_VAL;
  switch (pf.kind) {
    case PhaseKind::AcSmall:
      if (t.is_zero() || is_point(t, BigComplex(1))) fail(ErrorCode::AtSingularity, "t at a branch point");
      if (real_in(t, -inf, 0) || real_in(t, 1, inf)) fail(ErrorCode::OnBranchCut, "t on (-inf,0] or [1,inf)");
      break;
    case PhaseKind::AcLarge:
      if (t.is_zero() || is_point(t, BigComplex(1))) fail(ErrorCode::AtSingularity, "t at a branch point");
      if (real_in(t, -inf, 1)) fail(ErrorCode::OnBranchCut, "t on (-inf,1]");
      break;
    case PhaseKind::Ab:
    case PhaseKind::AbNeg: {
      if (t.is_zero() || is_point(t, BigComplex(1))) fail(ErrorCode::AtSingularity, "t at a branch point");
      BigComplex w = 1.0 - pf.z * t;
      if (w.is_zero()) fail(ErrorCode::AtSingularity, "t at 1/z");
      if (real_in(t, -inf, 1)) fail(ErrorCode::OnBranchCut, "t on (-inf,1]");
      if (w.im().is_zero() && w.re().sign() < 0) fail(ErrorCode::OnBranchCut, "t on the cut from 1/z");
      break;
    }
    case PhaseKind::Stirling:
      if (t.is_zero()) fail(ErrorCode::AtSingularity, "t = 0");
      if (real_in(t, -inf, 0)) fail(ErrorCode::OnBranchCut, "t on (-inf,0]");
      break;
    case PhaseKind::Gaussian: break;
  }
}

BigComplex ab_g(const PhaseFunction& pf, const BigComplex& t) {
  return pf.eps * log(t) - pf.eps * log(t - 1.0) - log(1.0 - pf.z * t);
}

// derivatives of order 1..3
BigComplex deriv(const PhaseFunction& pf, const BigComplex& t, int order) {
  const Real& e = pf.eps;
  Real one_m_e = 1.0 - e;
  switch (pf.kind) {
    case PhaseKind::AcSmall: {
      BigComplex u = 1.0 - t;
      if (order == 1) return e / t - one_m_e / u;
      if (order == 2) return -(e / (t * t)) - one_m_e / (u * u);
      return 2.0 * e / (t * t * t) - 2.0 * one_m_e / (u * u * u);
    }
    case PhaseKind::AcLarge: {
      BigComplex u = t - 1.0;
      if (order == 1) return e / t + one_m_e / u;
      if (order == 2) return -(e / (t * t)) - one_m_e / (u * u);
      return 2.0 * e / (t * t * t) + 2.0 * one_m_e / (u * u * u);
    }
    case PhaseKind::Ab:
    case PhaseKind::AbNeg: {
      BigComplex u = t - 1.0;
      BigComplex w = 1.0 - pf.z * t;
      BigComplex d;
      if (order == 1) d = e / t - e / u + pf.z / w;
      else if (order == 2) d = -(e / (t * t)) + e / (u * u) + pf.z * pf.z / (w * w);
      else d = 2.0 * e / (t * t * t) - 2.0 * e / (u * u * u) + 2.0 * pf.z * pf.z * pf.z / (w * w * w);
      return pf.kind == PhaseKind::Ab ? d : -d;
    }
    case PhaseKind::Gaussian:
      if (order == 1) return -2.0 * t;
      if (order == 2) return BigComplex(Real(-2, t.bits()));
      return BigComplex(Real(0, t.bits()));
    case PhaseKind::Stirling:
      if (order == 1) return 1.0 / t - 1.0;
      if (order == 2) return -1.0 / (t * t);
      return 2.0 / (t * t * t);
  }
  return {};
}

}  // namespace

BigComplex phase_eval(const PhaseFunction& pf, const BigComplex& t) {
  check_domain(pf, t);
  switch (pf.kind) {
    case PhaseKind::AcSmall: return pf.eps * log(t) + (1.0 - pf.eps) * log(1.0 - t);
    case PhaseKind::AcLarge: return pf.eps * log(t) + (1.0 - pf.eps) * log(t - 1.0);
    case PhaseKind::Ab: return ab_g(pf, t);
    case PhaseKind::AbNeg: {
      Real pi = Real::pi(t.bits());
      return BigComplex(Real(0, t.bits()), pf.eps * pi) - ab_g(pf, t);
    }
    case PhaseKind::Gaussian: return -(t * t);
    case PhaseKind::Stirling: return log(t) - t;
  }
  return {};
}

BigComplex phase_deriv(const PhaseFunction& pf, const BigComplex& t, int order) {
  if (order < 0 || order > 2) fail(ErrorCode::ParameterDomain, "derivative order must be 0, 1 or 2");
  if (order == 0) return phase_eval(pf, t);
  check_domain(pf, t);
  return deriv(pf, t, order);
}

std::vector<BigComplex> singular_points(const PhaseFunction& pf) {
  switch (pf.kind) {
    case PhaseKind::AcSmall:
    case PhaseKind::AcLarge: return {BigComplex(0), BigComplex(1)};
    case PhaseKind::Ab:
    case PhaseKind::AbNeg: return {BigComplex(0), BigComplex(1), 1.0 / pf.z};
    case PhaseKind::Stirling: return {BigComplex(0)};
    case PhaseKind::Gaussian: return {};
  }
  return {};
}

std::vector<Real> steepest_angles(int order, const Real& alpha) {
  if (order < 1) fail(ErrorCode::ParameterDomain, "saddle order must be at least 1");
  long bits = alpha.bits();
  Real pi = Real::pi(bits);
  Real two_pi = pi * 2;
  std::vector<Real> out;
  for (int k = 0; k <= order; ++k) {
    Real th = (pi * static_cast<double>(2 * k + 1) - alpha) / static_cast<double>(order + 1);
    th = th - two_pi * floor(th / two_pi);
    if (th >= two_pi) th -= two_pi;
    out.push_back(th);
  }
  return out;
}

SaddleData make_saddle(const PhaseFunction& pf, const BigComplex& t0, const BigComplex& lam) {
  check_domain(pf, t0);
  long bits = std::max(t0.bits(), lam.bits());
  Real tol = ldexp(Real(1, bits), -(bits / 2));
  BigComplex g1 = deriv(pf, t0, 1);
  BigComplex g2 = deriv(pf, t0, 2);
  Real scale = max(Real(1, bits), abs(g2));
  if (abs(g1) > tol * scale) fail(ErrorCode::ParameterDomain, "t0 is not a saddle point");
  SaddleData s;
  s.t0 = t0;
  if (abs(g2) <= tol * max(Real(1, bits), abs(deriv(pf, t0, 3)))) {
    s.order = 2;
    s.g2 = deriv(pf, t0, 3);
  } else {
    s.order = 1;
    s.g2 = g2;
  }
  s.angles = steepest_angles(s.order, arg(lam * s.g2));
  return s;
}

SaddleData ac_saddle(const PhaseFunction& pf, const BigComplex& lam) {
  if (pf.kind != PhaseKind::AcSmall && pf.kind != PhaseKind::AcLarge)
    fail(ErrorCode::ParameterDomain, "ac_saddle requires an AC phase function");
  return make_saddle(pf, BigComplex(pf.eps), lam);
}

BigComplex integrand_eval(const Integrand& f, const BigComplex& t) {
  switch (f.kind) {
    case IntegrandKind::One: return BigComplex(Real(1, t.bits()));
    case IntegrandKind::Gaussian: return exp(-(t * t));
    case IntegrandKind::EulerA:
    case IntegrandKind::LoopPower: {
      BigComplex u = f.kind == IntegrandKind::EulerA ? 1.0 - t : t - 1.0;
      BigComplex l = (f.a - 1.0) * log(t) + (f.c - f.a - 1.0) * log(u);
      if (!f.b.is_zero()) l -= f.b * log(1.0 - f.z * t);
      return exp(l);
    }
  }
  return {};
}

Real descent_angle(const SaddleData& saddle, double forward_dir) {
  if (saddle.angles.empty()) fail(ErrorCode::ParameterDomain, "saddle without angles");
  const Real* best = nullptr;
  double best_d = 1e300;
  for (const auto& a : saddle.angles) {
    double d = std::remainder(a.to_double() - forward_dir, 2 * M_PI);
    if (std::abs(d) < best_d) {
      best_d = std::abs(d);
      best = &a;
    }
  }
  return *best;
}

BigComplex saddle_approx(const PhaseFunction& pf, const Integrand& f, const SaddleData& saddle, const BigComplex& lam,
                         double forward_dir) {
  if (saddle.order != 1) fail(ErrorCode::HigherOrderSaddle, "only simple saddles are supported");
  long bits = std::max(saddle.t0.bits(), lam.bits());
  Real theta = descent_angle(saddle, forward_dir).with_bits(bits);
  Real amp = sqrt(Real::pi(bits) * 2 / abs(lam * saddle.g2));
  BigComplex ph = lam * phase_eval(pf, saddle.t0) + BigComplex(Real(0, bits), theta);
  return integrand_eval(f, saddle.t0) * exp(ph) * amp;
}

namespace {

Real distance_to_singular(const std::vector<BigComplex>& sing, const BigComplex& t) {
  Real d(1e300, t.bits());
  for (const auto& s : sing) d = min(d, abs(t - s));
  return d;
}

struct Branch {
  std::vector<BigComplex> pts;
};

Branch trace_branch(const PhaseFunction& pf, const BigComplex& t0, const Real& theta, const BigComplex& lam,
                    const Real& arclen, const Real& step, const TraceConfig& cfg) {
  long bits = std::max(t0.bits(), lam.bits());
  std::vector<BigComplex> sing = singular_points(pf);
  BigComplex v0 = lam * phase_eval(pf, t0);
  Real c0 = v0.im();
  Real re_prev = v0.re();
  Real re0 = v0.re();
  Real tol(cfg.tolerance, bits);
  tol = max(tol, ldexp(max(Real(1, bits), abs(v0)), -(bits - 16)));
  Real floor_step = arclen * cfg.step_floor;
  Real h = step;
  Real s(0, bits);
  BigComplex t = t0;
  bool first = true;
  Branch br;
  BigComplex I = BigComplex::i(bits);
  while (s < arclen) {
    Real dist = distance_to_singular(sing, t);
    Real hh = min(h, dist / 4);
    if (hh < floor_step) {
      if (re0 - re_prev > 1 || dist < floor_step * 1e3) break;  // reached an endpoint
      fail(ErrorCode::StallNearSingularity, "path trace stalled near a singularity");
    }
    BigComplex d;
    if (first) {
      d = BigComplex::polar(Real(1, bits), theta);
    } else {
      BigComplex gp = lam * deriv(pf, t, 1);
      d = -conj(gp) / abs(gp);
    }
    BigComplex tn = t + d * hh;
    bool ok = false;
    Real re_new;
    try {
      BigComplex n = I * d;
      for (int it = 0; it < 30; ++it) {
        BigComplex v = lam * phase_eval(pf, tn);
        Real r = v.im() - c0;
        if (abs(r) <= tol) {
          ok = true;
          re_new = v.re();
          break;
        }
        BigComplex gp = lam * deriv(pf, tn, 1);
        Real dr = (gp * n).im();
        if (dr.is_zero()) break;
        tn = tn - n * (r / dr);
      }
    } catch (const Error&) {
      ok = false;
    }
    if (ok && (!(re_new < re_prev) || abs(tn - t) > hh * 2)) ok = false;
    if (!ok) {
      h = hh / 2;
      if (h < floor_step) {
        if (re0 - re_prev > 1 || dist < floor_step * 1e3) break;
        fail(ErrorCode::StallNearSingularity, "path trace stalled near a singularity");
      }
      continue;
    }
    s += abs(tn - t);
    t = tn;
    re_prev = re_new;
    br.pts.push_back(t);
    first = false;
    h = min(step, hh * 2);
    if (re0 - re_prev > Real(cfg.drop, bits)) break;
  }
  return br;
}

BigComplex lam_g_or_nan(const PhaseFunction& pf, const BigComplex& lam, const BigComplex& t) {
  try {
    return lam * phase_eval(pf, t);
  } catch (const Error&) {
    Real n = Real::nan(t.bits());
    return BigComplex(n, n);
  }
}

}  // namespace

Polyline sd_path_trace(const PhaseFunction& pf, const SaddleData& saddle, const BigComplex& lam, const Real& arclen,
                       const Real& step, double forward_dir, const TraceConfig& cfg) {
  if (saddle.order != 1) fail(ErrorCode::HigherOrderSaddle, "path tracing needs a simple saddle");
  if (!(step > 0) || !(arclen > 0)) fail(ErrorCode::ParameterDomain, "step and arclen must be positive");
  Real th_f = descent_angle(saddle, forward_dir);
  Real th_b = th_f + Real::pi(th_f.bits());
  Branch fwd = trace_branch(pf, saddle.t0, th_f, lam, arclen, step, cfg);
  Branch back = trace_branch(pf, saddle.t0, th_b, lam, arclen, step, cfg);
  Polyline out;
  out.lam = lam;
  for (auto it = back.pts.rbegin(); it != back.pts.rend(); ++it) out.points.push_back(*it);
  out.saddle_index = out.points.size();
  out.points.push_back(saddle.t0);
  for (const auto& p : fwd.pts) out.points.push_back(p);
  for (const auto& p : out.points) out.lam_g.push_back(lam_g_or_nan(pf, lam, p));
  return out;
}

Polyline close_path(const Polyline& path, const BigComplex& start, const BigComplex& end) {
  Polyline out = path;
  out.points.insert(out.points.begin(), start);
  out.points.push_back(end);
  Real n = Real::nan(start.bits());
  out.lam_g.insert(out.lam_g.begin(), BigComplex(n, n));
  out.lam_g.push_back(BigComplex(n, n));
  out.saddle_index += 1;
  out.closed_at_start = true;
  out.closed_at_end = true;
  return out;
}

namespace {

// distance from p to the open segment (a, b)
Real segment_distance(const BigComplex& p, const BigComplex& a, const BigComplex& b) {
  BigComplex d = b - a;
  Real len2 = norm(d);
  if (len2.is_zero()) return abs(p - a);
  Real u = ((p - a) * conj(d)).re() / len2;
  if (u <= 0 || u >= 1) return Real(1e300, p.bits());
  return abs(p - (a + d * u));
}

}  // namespace

BigComplex sd_integrate(const PhaseFunction& pf, const Integrand& f, const Polyline& path, const BigComplex& lam,
                        const Precision& prec) {
  prec.validate();
  if (path.points.size() < 2) fail(ErrorCode::ParameterDomain, "path needs at least two points");
  long bits = prec.bits + 16;
  std::vector<BigComplex> sing = singular_points(pf);
  if (f.kind == IntegrandKind::EulerA || f.kind == IntegrandKind::LoopPower) {
    sing.push_back(BigComplex(0));
    sing.push_back(BigComplex(1));
    if (!f.z.is_zero() && !f.b.is_nonpositive_integer()) sing.push_back(1.0 / f.z);
  }
  Real guard = ldexp(Real(1, bits), -(bits / 2));
  BigComplex lam_w = lam.with_bits(bits);
  Integrand fw = f;
  fw.a = f.a.with_bits(bits);
  fw.b = f.b.with_bits(bits);
  fw.c = f.c.with_bits(bits);
  fw.z = f.z.with_bits(bits);
  PhaseFunction pw = pf;
  pw.eps = pf.eps.with_bits(bits);
  pw.z = pf.z.with_bits(bits);
  auto h = [&](const BigComplex& t) {
    try {
      return integrand_eval(fw, t) * exp(lam_w * phase_eval(pw, t));
    } catch (const Error& e) {
      fail(ErrorCode::PathSingularity, std::string("integrand undefined on the path: ") + e.what());
    }
  };
  Precision qp = prec;
  qp.bits = bits;
  BigComplex total(Real(0, bits));
  std::size_t nseg = path.points.size() - 1;
  for (std::size_t i = 0; i < nseg; ++i) {
    BigComplex a = path.points[i].with_bits(bits);
    BigComplex b = path.points[i + 1].with_bits(bits);
    BigComplex d = b - a;
    if (d.is_zero()) continue;
    for (const auto& sp : sing) {
      // endpoint contact at the path ends is left to tanh-sinh
      if ((i == 0 && sp == a) || (i + 1 == nseg && sp == b)) continue;
      if (segment_distance(sp, a, b) < guard) fail(ErrorCode::PathSingularity, "path passes through a singularity");
    }
    QuadResult q;
    if (i == 0 || i + 1 == nseg) {
      auto g = [&](const Real& from_lo, const Real& to_hi) {
        BigComplex t = from_lo <= to_hi ? a + d * from_lo : b - d * to_hi;
        // nodes that round onto an endpoint singularity contribute nothing
        if (t == a || t == b) {
          for (const auto& sp : sing)
            if (t == sp) return BigComplex(Real(0, bits));
        }
        return h(t);
      };
      q = tanh_sinh(g, Real(0, bits), Real(1, bits), qp);
    } else {
      auto g = [&](const Real& s) { return h(a + d * s); };
      q = gauss_legendre_adaptive(g, Real(0, bits), Real(1, bits), qp, 16);
    }
    total += q.value * d;
  }
  return total.with_bits(prec.bits);
}

void write_polyline_csv(std::ostream& os, const Polyline& path) {
  os << "idx,t_re,t_im,re_lg,im_lg\n";
  for (std::size_t i = 0; i < path.points.size(); ++i) {
    const auto& t = path.points[i];
    const auto& v = path.lam_g[i];
    os << i << ',' << t.re().to_string() << ',' << t.im().to_string() << ',' << v.re().to_string() << ','
       << v.im().to_string() << '\n';
  }
}

Real dominance_f(const Real& eps, const Real& r, const Real& theta) {
  Real x = r * cos(theta) - 1.0;
  Real y = r * sin(theta);
  return (1.0 - eps) * atan2(y, x) - theta;
}

Real dominance_f_dr(const Real& eps, const Real& r, const Real& theta) {
  Real den = (r - 1.0) * (r - 1.0) + 2.0 * r * (1.0 - cos(theta));
  return -(1.0 - eps) * sin(theta) / den;
}

Dominance critical_point_dominance(const Real& eps, const BigComplex& z, const Real& arg_lambda) {
  if (!(eps > 0 && eps < 1)) fail(ErrorCode::DomainViolation, "dominance test requires 0 < eps < 1");
  long bits = std::max(eps.bits(), z.bits());
  Real half_pi = Real::pi(bits) / 2;
  Real th = arg(z);
  if (!(abs(th) < half_pi)) fail(ErrorCode::DomainViolation, "dominance test requires |arg z| < pi/2");
  Real inv = 1.0 / eps;
  Real tol = ldexp(inv, -(bits / 2));
  if (abs(z - BigComplex(inv)) <= tol) return Dominance::Inconclusive;
  Real r = abs(z);
  if (r < inv - tol) fail(ErrorCode::DomainViolation, "dominance test requires |z| > 1/eps");
  if (arg_lambda.is_zero()) {
    // real lambda: compare Re g at t_c and t_0 through h_eps(Re z)
    Real x = z.re();
    Real h = pow(abs((x - 1.0) / (1.0 - eps)), 1.0 - eps) / (pow(eps, eps) * abs(x));
    if (abs(h - 1.0) <= tol) return Dominance::Inconclusive;
    return h < 1 ? Dominance::SaddleDominates : Dominance::CriticalDominates;
  }
  Real f = dominance_f(eps, r, th);
  if (f.is_zero()) return Dominance::Inconclusive;
  return f.sign() == arg_lambda.sign() ? Dominance::SaddleDominates : Dominance::CriticalDominates;
}

}  // namespace hgfae::msd
