#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace hgfae {

inline constexpr long kDefaultBits = 256;
inline constexpr long kMinBits = 64;

// Owning wrapper around an mpfr_t. Results of binary operations carry the
// larger of the operand precisions.
class Real {
 public:
  Real();
  Real(double v, long bits = kDefaultBits);
  Real(int v, long bits = kDefaultBits);
  Real(long v, long bits = kDefaultBits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real zero(long bits);
  static Real nan(long bits);
  static Real pi(long bits);
  static Real from_string(const std::string& s, long bits = kDefaultBits);
  static Real ratio(long num, long den, long bits = kDefaultBits);

  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  // Copy rounded to a new precision.
  Real with_bits(long bits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits
  // (0 = enough digits to round-trip at this precision).
  std::string to_string(int digits = 0) const;

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent() const;  // binary exponent, value in [2^(e-1), 2^e)

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

 private:
  void init(long bits);
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, double b);
Real operator-(const Real& a, double b);
Real operator*(const Real& a, double b);
Real operator/(const Real& a, double b);
Real operator+(double a, const Real& b);
Real operator-(double a, const Real& b);
Real operator*(double a, const Real& b);
Real operator/(double a, const Real& b);

int compare(const Real& a, const Real& b);
int compare(const Real& a, double b);
inline bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return compare(a, b) != 0; }
inline bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
inline bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
inline bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
inline bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
inline bool operator==(const Real& a, double b) { return compare(a, b) == 0; }
inline bool operator!=(const Real& a, double b) { return compare(a, b) != 0; }
inline bool operator<(const Real& a, double b) { return compare(a, b) < 0; }
inline bool operator<=(const Real& a, double b) { return compare(a, b) <= 0; }
inline bool operator>(const Real& a, double b) { return compare(a, b) > 0; }
inline bool operator>=(const Real& a, double b) { return compare(a, b) >= 0; }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real ceil(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// |a - b| / |b|, or |a - b| when b = 0.
Real rel_diff(const Real& a, const Real& b);
// 2^-bits at the given precision.
Real epsilon(long bits);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace hgfae
