#include "hgfae/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace hgfae {

namespace {

constexpr long kGuard = 16;
constexpr double kMaxAbscissa = 10.0;

struct TsLevelSum {
  BigComplex sum;
  long evaluations = 0;
};

// Adds f at s = start*h, (start+stride)*h, ... on both sides until the tail
// becomes negligible.
TsLevelSum ts_sum(const EndpointIntegrand& f, const Real& len, const Real& h, long start, long stride,
                  const Real& negligible, long bits) {
  TsLevelSum out{BigComplex(Real(0, bits)), 0};
  Real half_pi = Real::pi(bits) / 2;
  auto node = [&](const Real& s) {
    Real u = half_pi * sinh(s);
    Real e2u = exp(u * 2);
    Real from_lo = len / (1.0 + 1.0 / e2u);
    Real to_hi = len / (1.0 + e2u);
    Real ch = cosh(u);
    Real w = len / 2 * half_pi * cosh(s) / (ch * ch);
    return std::make_pair(std::make_pair(from_lo, to_hi), w);
  };
  if (start == 0) {
    auto [pt, w] = node(Real(0, bits));
    out.sum += f(pt.first, pt.second) * w;
    ++out.evaluations;
    start = stride;
  }
  for (int side = -1; side <= 1; side += 2) {
    int small_run = 0;
    for (long k = start;; k += stride) {
      Real s = h * static_cast<double>(k * side);
      if (abs(s) > kMaxAbscissa) break;
      auto [pt, w] = node(s);
      if (pt.first.is_zero() || pt.second.is_zero()) break;
      BigComplex term = f(pt.first, pt.second) * w;
      ++out.evaluations;
      out.sum += term;
      if (abs(term) <= negligible * abs(out.sum) && abs(s) > 2) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
    }
  }
  return out;
}

class RuleCache {
 public:
  GaussRule get(int n, long bits) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(n, bits);
    auto it = rules_.find(key);
    if (it != rules_.end()) return it->second;
    GaussRule r = build(n, bits);
    rules_.emplace(key, r);
    return r;
  }

 private:
  static GaussRule build(int n, long bits) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    long wb = bits + kGuard;
    Real tol = epsilon(bits);
    for (int i = 0; i < (n + 1) / 2; ++i) {
      Real x(std::cos(M_PI * (i + 0.75) / (n + 0.5)), wb);
      Real dp(0, wb);
      for (int it = 0; it < 200; ++it) {
        // three-term recurrence for P_n and P_{n-1}
        Real p0(1, wb), p1 = x;
        for (int k = 2; k <= n; ++k) {
          Real p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
          p0 = std::move(p1);
          p1 = std::move(p2);
        }
        dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        Real dx = p1 / dp;
        x -= dx;
        if (abs(dx) <= tol) {
          // refresh the derivative at the converged node
          Real q0(1, wb), q1 = x;
          for (int k = 2; k <= n; ++k) {
            Real q2 = ((2.0 * k - 1) * x * q1 - (k - 1.0) * q0) / static_cast<double>(k);
            q0 = std::move(q1);
            q1 = std::move(q2);
          }
          dp = static_cast<double>(n) * (x * q1 - q0) / (x * x - 1.0);
          break;
        }
      }
      Real w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.nodes[i] = x.with_bits(bits);
      r.weights[i] = w.with_bits(bits);
      r.nodes[n - 1 - i] = (-x).with_bits(bits);
      r.weights[n - 1 - i] = w.with_bits(bits);
    }
    return r;
  }

  std::mutex mu_;
  std::map<std::pair<int, long>, GaussRule> rules_;
};

RuleCache& rule_cache() {
  static RuleCache c;
  return c;
}

BigComplex gl_panel(const PointIntegrand& f, const GaussRule& rule, const Real& a, const Real& b, long& evals) {
  Real mid = (a + b) / 2;
  Real half = (b - a) / 2;
  BigComplex s(Real(0, a.bits()));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += f(mid + half * rule.nodes[i]) * rule.weights[i];
    ++evals;
  }
  return s * half;
}

struct GlState {
  const PointIntegrand& f;
  const GaussRule& rule;
  Real abs_tol;
  int max_depth;
  long evals = 0;
  bool converged = true;
  Real err;
};

BigComplex gl_recurse(GlState& st, const Real& a, const Real& b, const BigComplex& whole, int depth) {
  Real m = (a + b) / 2;
  BigComplex left = gl_panel(st.f, st.rule, a, m, st.evals);
  BigComplex right = gl_panel(st.f, st.rule, m, b, st.evals);
  BigComplex both = left + right;
  Real diff = abs(both - whole);
  if (diff <= st.abs_tol || depth >= st.max_depth) {
    if (diff > st.abs_tol) st.converged = false;
    st.err += diff;
    return both;
  }
  GlState& s = st;
  Real saved = s.abs_tol;
  s.abs_tol = saved / 2;
  BigComplex r = gl_recurse(s, a, m, left, depth + 1) + gl_recurse(s, m, b, right, depth + 1);
  s.abs_tol = saved;
  return r;
}

}  // namespace

QuadResult tanh_sinh(const EndpointIntegrand& f, const Real& lo, const Real& hi, const Precision& prec,
                     int max_levels) {
  long bits = prec.bits + kGuard;
  Real len = (hi - lo).with_bits(bits);
  Real negligible = epsilon(prec.bits);
  Real tol = prec.quadrature_tolerance.with_bits(bits);
  QuadResult res;
  Real h(1, bits);
  TsLevelSum acc = ts_sum(f, len, h, 0, 1, negligible, bits);
  BigComplex prev = acc.sum * h;
  res.evaluations = acc.evaluations;
  res.est_rel_error = Real(1, bits);
  for (int level = 1; level <= max_levels; ++level) {
    h = h / 2;
    TsLevelSum odd = ts_sum(f, len, h, 1, 2, negligible, bits);
    acc.sum += odd.sum;
    res.evaluations += odd.evaluations;
    BigComplex cur = acc.sum * h;
    Real mag = abs(cur);
    Real diff = abs(cur - prev);
    res.est_rel_error = mag.is_zero() ? diff : diff / mag;
    res.levels = level;
    prev = cur;
    if (level >= 3 && res.est_rel_error <= tol) {
      res.converged = true;
      break;
    }
  }
  res.value = prev.with_bits(prec.bits);
  res.est_rel_error = res.est_rel_error.with_bits(prec.bits);
  return res;
}

GaussRule gauss_legendre_rule(int n, long bits) { return rule_cache().get(n, bits); }

QuadResult gauss_legendre_adaptive(const PointIntegrand& f, const Real& lo, const Real& hi, const Precision& prec,
                                   int order, int max_depth) {
  long bits = prec.bits + kGuard;
  GaussRule rule = gauss_legendre_rule(order, bits);
  Real a = lo.with_bits(bits), b = hi.with_bits(bits);
  GlState st{f, rule, Real(0, bits), max_depth, 0, true, Real(0, bits)};
  BigComplex whole = gl_panel(f, rule, a, b, st.evals);
  Real scale = abs(whole);
  st.abs_tol = prec.quadrature_tolerance.with_bits(bits) * (scale.is_zero() ? Real(1, bits) : scale);
  BigComplex v = gl_recurse(st, a, b, whole, 0);
  QuadResult res;
  res.value = v.with_bits(prec.bits);
  Real mag = abs(v);
  res.est_rel_error = (mag.is_zero() ? st.err : st.err / mag).with_bits(prec.bits);
  res.evaluations = st.evals;
  res.converged = st.converged;
  res.levels = 0;
  return res;
}

}  // namespace hgfae
