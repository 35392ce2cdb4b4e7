#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "hgfae/real.hpp"

namespace hgfae {

// Arbitrary-precision complex number. Both parts share one precision.
class BigComplex {
 public:
  BigComplex() : re_(0, kDefaultBits), im_(0, kDefaultBits) {}
  BigComplex(double re, double im = 0.0, long bits = kDefaultBits) : re_(re, bits), im_(im, bits) {}
  BigComplex(int re) : re_(re, kDefaultBits), im_(0, kDefaultBits) {}
  BigComplex(long re) : re_(re, kDefaultBits), im_(0, kDefaultBits) {}
  BigComplex(const Real& re);
  BigComplex(const Real& re, const Real& im);
  BigComplex(std::complex<double> z, long bits = kDefaultBits) : re_(z.real(), bits), im_(z.imag(), bits) {}

  static BigComplex i(long bits = kDefaultBits) { return BigComplex(Real(0, bits), Real(1, bits)); }
  static BigComplex polar(const Real& r, const Real& theta);
  // Parses "x", "x+yi", "x-yi", "yi" or "x,y".
  static BigComplex parse(const std::string& s, long bits = kDefaultBits);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  long bits() const { return re_.bits(); }
  BigComplex with_bits(long bits) const { return BigComplex(re_.with_bits(bits), im_.with_bits(bits)); }

  std::complex<double> to_cd() const { return {re_.to_double(), im_.to_double()}; }
  std::string to_string(int digits = 0) const;

  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  // True when the value is a real integer (imaginary part exactly 0).
  bool is_integer() const { return im_.is_zero() && re_.is_integer(); }
  // Real integer <= 0.
  bool is_nonpositive_integer() const { return is_integer() && re_.sign() <= 0; }

  BigComplex operator-() const { return BigComplex(-re_, -im_); }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

 private:
  Real re_;
  Real im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const Real& b);
BigComplex operator*(const Real& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const Real& b);
BigComplex operator+(const BigComplex& a, double b);
BigComplex operator-(const BigComplex& a, double b);
BigComplex operator+(double a, const BigComplex& b);
BigComplex operator-(double a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, double b);
BigComplex operator*(double a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, double b);
BigComplex operator/(double a, const BigComplex& b);

bool operator==(const BigComplex& a, const BigComplex& b);
inline bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

BigComplex conj(const BigComplex& z);
Real abs(const BigComplex& z);
Real norm(const BigComplex& z);  // |z|^2
// Principal argument in (-pi, pi]; a negative real with a signed-zero
// imaginary part maps to +pi.
Real arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal logarithm ln|z| + i arg z.
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
// w^s = exp(s log w) with the principal logarithm.
BigComplex pow(const BigComplex& w, const BigComplex& s);
BigComplex pow(const BigComplex& w, long n);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
// exp(i pi x) for real x, computed with argument reduction mod 2.
BigComplex exp_i_pi(const Real& x);
// exp(i pi s) for complex s.
BigComplex exp_i_pi(const BigComplex& s);
// |a - b| / |b|, or |a - b| when b = 0.
Real rel_diff(const BigComplex& a, const BigComplex& b);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace hgfae
