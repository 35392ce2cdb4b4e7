#include "hgfae/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "hgfae/error.hpp"

namespace hgfae {

namespace {

constexpr long kGuardBits = 24;

// Coefficients B_2k / (2k (2k - 1)) of the Stirling series at a given
// precision, grown on demand. B_2k comes from the zeta identity
// B_2k = (-1)^(k+1) 2 (2k)! zeta(2k) / (2 pi)^2k.
class StirlingCoefficients {
 public:
  Real get(std::size_t k, long bits) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& table = tables_[bits];
    while (table.size() < k) table.push_back(compute(table.size() + 1, bits));
    return table[k - 1];
  }

 private:
  static Real compute(std::size_t k, long bits) {
    unsigned long n = 2 * k;
    Real zeta(0, bits);
    mpfr_zeta_ui(zeta.raw(), n, MPFR_RNDN);
    Real fact(0, bits);
    mpfr_fac_ui(fact.raw(), n, MPFR_RNDN);
    Real two_pi = Real::pi(bits) * 2;
    Real b = fact * zeta * 2 / pow(two_pi, static_cast<long>(n));
    if (k % 2 == 0) b = -b;
    return b / (static_cast<double>(n) * static_cast<double>(n - 1));
  }

  std::mutex mu_;
  std::map<long, std::vector<Real>> tables_;
};

StirlingCoefficients& coefficients() {
  static StirlingCoefficients c;
  return c;
}

long work_bits(const BigComplex& z, const Precision& prec) { return std::max(prec.bits, z.bits()) + kGuardBits; }

bool near_pole(const BigComplex& z, long bits) {
  if (z.re().sign() > 0) return false;
  Real n = round(z.re());
  Real tol = ldexp(max(Real(1, bits), abs(z.re())), -(bits - 8));
  return abs(z.im()) <= tol && abs(z.re() - n) <= tol;
}

// ln Gamma(w) by the asymptotic series; valid for Re w large.
BigComplex stirling_series(const BigComplex& w, long bits) {
  Real half_log_2pi = log(Real::pi(bits) * 2) / 2;
  BigComplex lw = log(w);
  BigComplex result = (w - 0.5) * lw - w + BigComplex(half_log_2pi);
  BigComplex inv = 1.0 / w;
  BigComplex inv2 = inv * inv;
  BigComplex power = inv;
  Real tol = epsilon(bits) * abs(result);
  Real prev_mag = Real(0, bits);
  for (std::size_t k = 1; k < 4000; ++k) {
    BigComplex term = power * coefficients().get(k, bits);
    Real mag = abs(term);
    // asymptotic series: stop at the smallest term
    if (k > 1 && mag > prev_mag) break;
    result += term;
    if (mag <= tol) break;
    prev_mag = mag;
    power *= inv2;
  }
  return result;
}

}  // namespace

BigComplex log_gamma(const BigComplex& z_in, const Precision& prec) {
  long out_bits = std::max(prec.bits, z_in.bits());
  long bits = work_bits(z_in, prec);
  BigComplex z = z_in.with_bits(bits);
  if (near_pole(z_in, out_bits)) fail(ErrorCode::PoleAtNonPositiveInteger, "log_gamma at a pole: " + z_in.to_string(12));

  if (z.re() < -100000) {
    // reflection keeps the shift count bounded; the imaginary part is then
    // fixed only modulo 2 pi
    BigComplex pi(Real::pi(bits));
    BigComplex r = log(pi) - log(sin(pi * z)) - log_gamma(1.0 - z, Precision::with_bits(bits));
    return r.with_bits(out_bits);
  }

  double threshold = std::max(32.0, 0.12 * static_cast<double>(bits));
  BigComplex shift_sum(Real(0, bits));
  BigComplex w = z;
  if (w.re() < threshold) {
    long n = static_cast<long>(std::ceil(threshold - w.re().to_double()));
    for (long k = 0; k < n; ++k) shift_sum += log(w + static_cast<double>(k));
    w = w + static_cast<double>(n);
  }
  BigComplex r = stirling_series(w, bits) - shift_sum;
  return r.with_bits(out_bits);
}

BigComplex gamma(const BigComplex& z, const Precision& prec) {
  if (z.is_integer() && z.re() > 0 && z.re() <= 1000) {
    long bits = std::max(prec.bits, z.bits());
    Real f(0, bits);
    mpfr_fac_ui(f.raw(), static_cast<unsigned long>(z.re().to_long() - 1), MPFR_RNDN);
    return BigComplex(f);
  }
  return exp(log_gamma(z, prec));
}

BigComplex reciprocal_gamma(const BigComplex& z, const Precision& prec) {
  long bits = std::max(prec.bits, z.bits());
  if (z.is_nonpositive_integer()) return BigComplex(Real::zero(bits));
  if (near_pole(z, bits)) return BigComplex(Real::zero(bits));
  if (z.is_integer() && z.re() <= 1000) return 1.0 / gamma(z, prec);
  return exp(-log_gamma(z, prec));
}

BigComplex pochhammer(const BigComplex& x, unsigned long n) {
  BigComplex r(Real(1, x.bits()));
  for (unsigned long k = 0; k < n; ++k) {
    if (k > 0 && r.is_zero()) break;
    r *= x + static_cast<double>(k);
  }
  return r;
}

BigComplex stirling_lgamma(const BigComplex& z_in, const Real& threshold, const Precision& prec) {
  long bits = std::max(prec.bits, z_in.bits());
  BigComplex z = z_in.with_bits(bits);
  if (z.re() <= 0) fail(ErrorCode::BelowThreshold, "stirling_lgamma requires Re z > 0");
  if (abs(z) < threshold) fail(ErrorCode::BelowThreshold, "stirling_lgamma below |z| threshold");
  Real half_log_2pi = log(Real::pi(bits) * 2) / 2;
  return (z - 0.5) * log(z) - z + BigComplex(half_log_2pi);
}

}  // namespace hgfae
