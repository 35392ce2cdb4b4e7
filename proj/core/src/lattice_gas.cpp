#include "hgfae/lattice_gas.hpp"

#include <algorithm>
#include <vector>

#include "hgfae/gamma.hpp"
#include "hgfae/hgf.hpp"

namespace hgfae::lattice {

namespace {

Real from_q(const mpq_class& q, long bits) {
  Real r(0, bits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real from_z(const mpz_class& z, long bits) {
  Real r(0, bits);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real from_ul(unsigned long v, long bits) {
  Real r(0, bits);
  mpfr_set_ui(r.raw(), v, MPFR_RNDN);
  return r;
}

void require_direct(const LatticeGasSystem& s) {
  validate_system(s);
  if (s.p + s.t > s.N) fail(ErrorCode::ComplementRequired, "p + t > N; use holes_complement");
}

// Pairwise sum in a fixed order.
mpq_class pairwise_sum(std::vector<mpq_class>& v, size_t lo, size_t hi) {
  if (hi - lo == 0) return 0;
  if (hi - lo == 1) return v[lo];
  size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// log of F(-p, -t; c; z) from the dominant saddle, integer p, t, c >= 1.
BigComplex dense_log_f(unsigned long p, unsigned long t, unsigned long c, const BigComplex& z, long bits) {
  Real rp = from_ul(p, bits), rt = from_ul(t, bits), rc = from_ul(c, bits);
  Real diff = rt - rp;
  BigComplex shat = sqrt(BigComplex(diff * diff) + 4.0 * rp * rt / z);
  BigComplex tp = (BigComplex(diff) + shat) / (2.0 * rt);
  Precision pr = default_precision();
  pr.bits = bits;
  BigComplex lg = log_gamma(BigComplex(rc), pr);
  Real two_pi = Real::pi(bits) * 2;
  BigComplex out = lg + (0.5 - rc) * log(rp) - (BigComplex(log(two_pi)) + log(shat / rt)) / 2.0;
  out = out + (rc + rp) * log(tp) - rp * log(tp - 1.0) - (rc + rt) * log(1.0 - z * tp) + (rc + rp + rt) * log(1.0 - z);
  return out;
}

}  // namespace

void validate_system(const LatticeGasSystem& s) {
  if (s.t > s.N || s.p > s.N) fail(ErrorCode::DomainViolation, "t and p must not exceed N");
  if (s.P_on < 0 || s.P_on > 1) fail(ErrorCode::DomainViolation, "P_on must lie in [0, 1]");
  if (s.P_off <= 0 || s.P_off > 1) fail(ErrorCode::DomainViolation, "P_off must lie in (0, 1]");
}

mpq_class zeta_variable(const LatticeGasSystem& s) {
  if (s.P_off <= 0) fail(ErrorCode::DomainViolation, "P_off must be positive");
  mpq_class z = 1 + s.P_on / s.P_off;
  if (s.P_on == 1) z -= 1;
  z.canonicalize();
  return z;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpq_class partition_bruteforce(const LatticeGasSystem& s) {
  require_direct(s);
  return partition_bruteforce(s.N, s.t, s.p, s.P_on / s.P_off, s.P_on == 1);
}

mpq_class partition_bruteforce(unsigned long N, unsigned long t, unsigned long p, const mpq_class& r, bool all_bind) {
  if (t > N || p > N) fail(ErrorCode::DomainViolation, "t and p must not exceed N");
  if (p + t > N) fail(ErrorCode::ComplementRequired, "p + t > N; use holes_complement");
  unsigned long m = std::min(p, t);
  if (m > kBruteForceGuard) fail(ErrorCode::SizeGuard, "min(p, t) too large for the exact double sum");
  std::vector<mpq_class> outer(m + 1);
  for (unsigned long n = 0; n <= m; ++n) {
    mpq_class inner;
    if (all_bind) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), n);
      mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), n);
      inner = mpq_class(num, den);
    } else {
      std::vector<mpq_class> terms(n + 1);
      mpq_class rk = 1;
      for (unsigned long k = 0; k <= n; ++k) {
        terms[k] = mpq_class(binomial(n, k)) * rk;
        rk *= r;
      }
      inner = pairwise_sum(terms, 0, terms.size());
    }
    outer[n] = mpq_class(binomial(N - t, p - n) * binomial(t, n)) * inner;
  }
  mpq_class z = pairwise_sum(outer, 0, outer.size());
  z.canonicalize();
  return z;
}

mpq_class partition_closed_rational(const LatticeGasSystem& s) {
  require_direct(s);
  return partition_closed_rational(s.N, s.t, s.p, zeta_variable(s));
}

mpq_class partition_closed_rational(unsigned long N, unsigned long tt, unsigned long pp, const mpq_class& z) {
  if (tt > N || pp > N) fail(ErrorCode::DomainViolation, "t and p must not exceed N");
  if (pp + tt > N) fail(ErrorCode::ComplementRequired, "p + t > N; use holes_complement");
  // (-p)_n (-t)_n / (N-p-t+1)_n z^n / n!
  mpq_class term = 1, sum = 1;
  long p = static_cast<long>(pp), t = static_cast<long>(tt);
  long c = static_cast<long>(N - pp - tt) + 1;
  long m = std::min(p, t);
  for (long n = 0; n < m; ++n) {
    term *= mpq_class((-p + n) * (-t + n));
    term /= mpq_class((c + n) * (n + 1));
    term *= z;
    sum += term;
  }
  sum *= mpq_class(binomial(N - tt, pp));
  sum.canonicalize();
  return sum;
}

BigComplex partition_closed(const LatticeGasSystem& s, const Precision& prec) {
  require_direct(s);
  long bits = prec.bits;
  Real zr = from_q(zeta_variable(s), bits);
  Real c = from_ul(s.N - s.p - s.t + 1, bits);
  auto in = hgf::make_input(BigComplex(-from_ul(s.p, bits)), BigComplex(-from_ul(s.t, bits)), BigComplex(c),
                            BigComplex(zr));
  BigComplex f = hgf::hgf_eval(in, prec).value;
  return f * from_z(binomial(s.N - s.t, s.p), bits);
}

PartitionAe partition_ae_dilute(const LatticeGasSystem& s, const Precision& prec, const RegimeGuards& g,
                                bool simplified) {
  require_direct(s);
  long bits = prec.bits;
  Real z = from_q(zeta_variable(s), bits);
  Real pt = from_ul(s.p, bits) * from_ul(s.t, bits);
  Real den = simplified ? from_ul(s.N, bits) : from_ul(s.N - s.p - s.t + 1, bits);
  PartitionAe out;
  out.value = BigComplex(from_z(binomial(s.N - s.t, s.p), bits) * (1.0 + pt * z / den));
  out.form = simplified ? "1 + p t z / N" : "1 + p t z / (N - p - t + 1)";
  if (pt.to_double() > g.dilute_ratio * static_cast<double>(s.N))
    out.warning = Warning{ErrorCode::RegimeGuard, "p t is not small against N"};
  return out;
}

PartitionAe partition_ae_trapping(const LatticeGasSystem& s, const Precision& prec, const RegimeGuards& g) {
  require_direct(s);
  if (s.p + s.t == s.N) fail(ErrorCode::DomainViolation, "trapping form needs p + t < N");
  long bits = prec.bits;
  Real z = from_q(zeta_variable(s), bits);
  bool swapped = s.p > s.t;
  unsigned long small = swapped ? s.t : s.p, large = swapped ? s.p : s.t;
  Real gap = from_ul(s.N - s.p - s.t, bits);
  Real base = 1.0 + from_ul(large, bits) * z / gap;
  Real v(0, bits);
  mpfr_pow_ui(v.raw(), base.raw(), small, MPFR_RNDN);
  PartitionAe out;
  out.value = BigComplex(from_z(binomial(s.N - s.t, s.p), bits) * v);
  out.form = swapped ? "(1 + p z / (N - p - t))^t" : "(1 + t z / (N - p - t))^p";
  if (small > g.trapping_small) out.warning = Warning{ErrorCode::RegimeGuard, "the small count is not small"};
  return out;
}

BigComplex dense_t_plus(unsigned long p, unsigned long t, const BigComplex& z) {
  long bits = z.bits();
  Real rp = from_ul(p, bits), rt = from_ul(t, bits);
  Real diff = rt - rp;
  BigComplex shat = sqrt(BigComplex(diff * diff) + 4.0 * rp * rt / z);
  return (BigComplex(diff) + shat) / (2.0 * rt);
}

PartitionAe partition_ae_dense(const LatticeGasSystem& s, const Precision& prec, const RegimeGuards& g) {
  require_direct(s);
  long bits = prec.bits;
  mpq_class zq = zeta_variable(s);
  if (zq == 1) fail(ErrorCode::ExcludedZ, "z = 1 is excluded");
  BigComplex z(from_q(zq, bits));
  BigComplex binom(from_z(binomial(s.N - s.t, s.p), bits));
  PartitionAe out;
  out.form = "dominant saddle";
  unsigned long gap = s.N - s.p - s.t;
  if (gap > g.dense_gap) out.warning = Warning{ErrorCode::RegimeGuard, "N - p - t is not small"};
  if (s.p == 0 || s.t == 0) {
    out.value = binom;
    out.form = "empty";
    return out;
  }
  out.value = binom * exp(dense_log_f(s.p, s.t, gap + 1, z, bits + 32)).with_bits(bits);
  return out;
}

Complemented holes_complement(const LatticeGasSystem& s) {
  validate_system(s);
  Complemented out;
  out.system = s;
  out.system.t = s.N - s.t;
  out.system.p = s.N - s.p;
  return out;
}

BigComplex kerr_emission_prob(const KerrChannel& ch, unsigned long m, unsigned long n, const Precision& prec,
                              const KerrConfig& cfg) {
  long bits = prec.bits;
  if (!(ch.x > 0)) fail(ErrorCode::DomainViolation, "x must be positive");
  if (ch.gamma_abs < 0 || ch.gamma_abs > 1) fail(ErrorCode::DomainViolation, "absorptivity must lie in [0, 1]");
  Real ex1 = exp(ch.x.with_bits(bits)) - 1.0;
  Real G = ch.gamma_abs.with_bits(bits);
  Real w = (exp(ch.beta.with_bits(bits)) - 1.0) * (exp(ch.mu.with_bits(bits)) - 1.0);
  Real mn = from_ul(m + n, bits);
  if (G.is_zero()) return BigComplex(Real(m + n == 0 ? 1 : 0, bits));
  Real lpre = log(ex1) + from_ul(n, bits) * ch.x.with_bits(bits) + mn * log(G) - (mn + 1.0) * log(ex1 + G);
  BigComplex f;
  if (std::min(m, n) >= cfg.asymptotic_from && w != 1) {
    f = exp(dense_log_f(m, n, 1, BigComplex(w), bits + 32)).with_bits(bits);
  } else {
    auto in = hgf::make_input(BigComplex(-from_ul(m, bits)), BigComplex(-from_ul(n, bits)), BigComplex(Real(1, bits)),
                              BigComplex(w));
    f = hgf::hgf_eval(in, prec).value;
  }
  return f * exp(lpre);
}

}  // namespace hgfae::lattice
