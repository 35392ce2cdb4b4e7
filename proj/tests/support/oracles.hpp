#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "hgfae/complex.hpp"

namespace oracle {

using hgfae::BigComplex;
using hgfae::Real;

inline double rel(const BigComplex& a, const BigComplex& b) { return hgfae::rel_diff(a, b).to_double(); }
inline double rel(const Real& a, const Real& b) { return hgfae::rel_diff(a, b).to_double(); }

// fixed seed so every run sees the same samples
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}
inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

// P_n(x) by the three-term recurrence
inline Real legendre_recurrence(unsigned long n, const Real& x) {
  long bits = x.bits();
  Real p0(1, bits), p1 = x;
  if (n == 0) return p0;
  for (unsigned long k = 1; k < n; ++k) {
    Real p2 = (Real(static_cast<long>(2 * k + 1), bits) * x * p1 - Real(static_cast<long>(k), bits) * p0) /
              Real(static_cast<long>(k + 1), bits);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// smallest m >= n with |cos((m + 1/2) theta - pi/4)| > floor, so relative
// errors are not measured next to a zero of the cosine
inline unsigned long away_from_cos_zero(unsigned long n, double theta, double floor = 0.3) {
  while (std::abs(std::cos((n + 0.5) * theta - M_PI / 4)) <= floor) ++n;
  return n;
}

// Plain partial sums of the defining series, |z| < 1 only; independent of
// the library's series code.
inline BigComplex hgf_partial_sums(const BigComplex& a, const BigComplex& b, const BigComplex& c,
                                   const BigComplex& z, long bits) {
  BigComplex term(Real(1, bits)), sum = term;
  Real tol = hgfae::epsilon(bits);
  for (long n = 0; n < 200000; ++n) {
    BigComplex nn(Real(n, bits));
    term = term * (a + nn) * (b + nn) / ((c + nn) * (nn + 1)) * z;
    sum += term;
    if (term.is_zero() || (n > 5 && hgfae::abs(term) < tol * hgfae::abs(sum))) break;
  }
  return sum;
}

}  // namespace oracle
