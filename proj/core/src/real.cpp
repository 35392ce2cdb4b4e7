#include "hgfae/real.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hgfae {

namespace {

bool alive(mpfr_srcptr p) { return p->_mpfr_d != nullptr; }

long max_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

template <typename F>
Real unary(const Real& x, F f) {
  Real r = Real::zero(x.bits());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

template <typename F>
Real binary(const Real& a, const Real& b, F f) {
  Real r = Real::zero(max_bits(a, b));
  f(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

void Real::init(long bits) {
  if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
}

Real::Real() {
  init(kDefaultBits);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, long bits) {
  init(bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(int v, long bits) {
  init(bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(long v, long bits) {
  init(bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
  init(o.bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  v_[0] = o.v_[0];
  o.v_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& o) {
  if (this == &o) return *this;
  if (!alive(v_)) {
    init(o.bits());
  } else if (bits() != o.bits()) {
    mpfr_set_prec(v_, o.bits());
  }
  mpfr_set(v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this == &o) return *this;
  if (alive(v_)) mpfr_clear(v_);
  v_[0] = o.v_[0];
  o.v_[0]._mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (alive(v_)) mpfr_clear(v_);
}

Real Real::zero(long bits) {
  Real r(0, bits);
  return r;
}

Real Real::nan(long bits) {
  Real r(0, bits);
  mpfr_set_nan(r.v_);
  return r;
}

Real Real::pi(long bits) {
  Real r(0, bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::from_string(const std::string& s, long bits) {
  Real r(0, bits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw std::invalid_argument("not a number: " + s);
  return r;
}

Real Real::ratio(long num, long den, long bits) {
  Real r(num, bits);
  mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
  return r;
}

Real Real::with_bits(long b) const {
  Real r(0, b);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (is_nan()) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (digits <= 0) digits = static_cast<int>(mpfr_get_str_ndigits(10, mpfr_get_prec(v_)));
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

long Real::exponent() const {
  if (is_zero() || !is_finite()) return 0;
  return static_cast<long>(mpfr_get_exp(v_));
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real operator+(const Real& a, double b) {
  Real r = Real::zero(a.bits());
  mpfr_add_d(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, double b) {
  Real r = Real::zero(a.bits());
  mpfr_sub_d(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, double b) {
  Real r = Real::zero(a.bits());
  mpfr_mul_d(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, double b) {
  Real r = Real::zero(a.bits());
  mpfr_div_d(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator+(double a, const Real& b) { return b + a; }
Real operator-(double a, const Real& b) {
  Real r = Real::zero(b.bits());
  mpfr_d_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(double a, const Real& b) { return b * a; }
Real operator/(double a, const Real& b) {
  Real r = Real::zero(b.bits());
  mpfr_d_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

int compare(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
int compare(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real pow(const Real& x, const Real& y) { return binary(x, y, mpfr_pow); }

Real pow(const Real& x, long n) {
  Real r = Real::zero(x.bits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) { return binary(x, y, mpfr_hypot); }

Real floor(const Real& x) {
  Real r = Real::zero(x.bits());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real ceil(const Real& x) {
  Real r = Real::zero(x.bits());
  mpfr_ceil(r.raw(), x.raw());
  return r;
}

Real round(const Real& x) {
  Real r = Real::zero(x.bits());
  mpfr_round(r.raw(), x.raw());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = Real::zero(x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return binary(a, b, mpfr_max); }
Real min(const Real& a, const Real& b) { return binary(a, b, mpfr_min); }

Real rel_diff(const Real& a, const Real& b) {
  Real d = abs(a - b);
  if (b.is_zero()) return d;
  return d / abs(b);
}

Real epsilon(long bits) { return ldexp(Real(1, bits), -bits); }

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_string(static_cast<int>(os.precision()));
}

}  // namespace hgfae
