#include "hgfae/complex.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hgfae {

namespace {

long mb(const BigComplex& a, const BigComplex& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

BigComplex::BigComplex(const Real& re) : re_(re), im_(0, re.bits()) {}

BigComplex::BigComplex(const Real& re, const Real& im) : re_(re), im_(im) {
  if (re_.bits() < im_.bits()) re_ = re_.with_bits(im_.bits());
  if (im_.bits() < re_.bits()) im_ = im_.with_bits(re_.bits());
}

BigComplex BigComplex::polar(const Real& r, const Real& theta) {
  return BigComplex(r * cos(theta), r * sin(theta));
}

BigComplex BigComplex::parse(const std::string& text, long bits) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  auto comma = s.find(',');
  if (comma != std::string::npos)
    return BigComplex(Real::from_string(s.substr(0, comma), bits), Real::from_string(s.substr(comma + 1), bits));
  if (s.back() != 'i' && s.back() != 'j') return BigComplex(Real::from_string(s, bits), Real(0, bits));
  s.pop_back();
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](const std::string& t) {
    if (t.empty() || t == "+") return Real(1, bits);
    if (t == "-") return Real(-1, bits);
    return Real::from_string(t, bits);
  };
  if (split == std::string::npos) return BigComplex(Real(0, bits), imag_of(s));
  return BigComplex(Real::from_string(s.substr(0, split), bits), imag_of(s.substr(split)));
}

std::string BigComplex::to_string(int digits) const {
  std::string r = re_.to_string(digits);
  std::string i = im_.to_string(digits);
  if (i.empty() || (i[0] != '-' && i[0] != '+')) i = "+" + i;
  return r + i + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& o) { return *this = *this + o; }
BigComplex& BigComplex::operator-=(const BigComplex& o) { return *this = *this - o; }
BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }
BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this = *this / o; }

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re() + b.re(), a.im() + b.im()}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re() - b.re(), a.im() - b.im()}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  if (b.is_real()) return a * b.re();
  if (a.is_real()) return a.re() * b;
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.is_real()) return a / b.re();
  // Smith's algorithm keeps intermediates bounded
  long bits = mb(a, b);
  if (abs(b.re()) >= abs(b.im())) {
    Real r = b.im() / b.re();
    Real d = b.re() + b.im() * r;
    return BigComplex((a.re() + a.im() * r) / d, (a.im() - a.re() * r) / d).with_bits(bits);
  }
  Real r = b.re() / b.im();
  Real d = b.re() * r + b.im();
  return BigComplex((a.re() * r + a.im()) / d, (a.im() * r - a.re()) / d).with_bits(bits);
}

BigComplex operator*(const BigComplex& a, const Real& b) { return {a.re() * b, a.im() * b}; }
BigComplex operator*(const Real& a, const BigComplex& b) { return b * a; }
BigComplex operator/(const BigComplex& a, const Real& b) { return {a.re() / b, a.im() / b}; }
BigComplex operator+(const BigComplex& a, double b) { return {a.re() + b, a.im()}; }
BigComplex operator-(const BigComplex& a, double b) { return {a.re() - b, a.im()}; }
BigComplex operator+(double a, const BigComplex& b) { return b + a; }
BigComplex operator-(double a, const BigComplex& b) { return {a - b.re(), -b.im()}; }
BigComplex operator*(const BigComplex& a, double b) { return {a.re() * b, a.im() * b}; }
BigComplex operator*(double a, const BigComplex& b) { return b * a; }
BigComplex operator/(const BigComplex& a, double b) { return {a.re() / b, a.im() / b}; }
BigComplex operator/(double a, const BigComplex& b) { return BigComplex(Real(a, b.bits())) / b; }

bool operator==(const BigComplex& a, const BigComplex& b) { return a.re() == b.re() && a.im() == b.im(); }

BigComplex conj(const BigComplex& z) { return {z.re(), -z.im()}; }
Real abs(const BigComplex& z) { return hypot(z.re(), z.im()); }
Real norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real arg(const BigComplex& z) {
  if (z.im().is_zero()) return z.re().sign() < 0 ? Real::pi(z.bits()) : Real::zero(z.bits());
  return atan2(z.im(), z.re());
}

BigComplex exp(const BigComplex& z) {
  Real m = exp(z.re());
  if (z.im().is_zero()) return {m, Real::zero(z.bits())};
  return {m * cos(z.im()), m * sin(z.im())};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  if (z.is_real() && z.re().sign() > 0) return {sqrt(z.re()), Real::zero(z.bits())};
  if (z.is_real()) return {Real::zero(z.bits()), sqrt(-z.re())};
  // principal root via half-angle formulas
  Real m = abs(z);
  Real t = sqrt((m + abs(z.re())) / 2);
  if (z.re().sign() >= 0) return {t, z.im() / (t * 2)};
  Real im = z.im().sign() >= 0 ? t : -t;
  return {abs(z.im()) / (t * 2), im};
}

BigComplex pow(const BigComplex& w, const BigComplex& s) {
  if (s.is_zero()) return BigComplex(Real(1, mb(w, s)));
  if (w.is_zero()) {
    if (s.re().sign() > 0) return BigComplex(Real::zero(mb(w, s)));
    throw std::domain_error("0 raised to a non-positive power");
  }
  if (s.is_integer() && abs(s.re()) <= 64) return pow(w.with_bits(mb(w, s)), s.re().to_long());
  return exp(s * log(w.with_bits(mb(w, s))));
}

BigComplex pow(const BigComplex& w, long n) {
  if (n < 0) return 1.0 / pow(w, -n);
  BigComplex result(Real(1, w.bits()));
  BigComplex base = w;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

BigComplex sin(const BigComplex& z) { return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())}; }
BigComplex cos(const BigComplex& z) { return {cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))}; }

BigComplex exp_i_pi(const Real& x) {
  long bits = x.bits();
  Real r = x - round(x / 2) * 2;  // in [-1, 1]
  if (r.is_integer()) return {Real(r.is_zero() ? 1 : -1, bits), Real::zero(bits)};
  Real twice = r * 2;
  if (twice.is_integer()) return {Real::zero(bits), Real(twice.sign(), bits)};
  Real ang = r * Real::pi(bits);
  return {cos(ang), sin(ang)};
}

BigComplex exp_i_pi(const BigComplex& s) {
  BigComplex e = exp_i_pi(s.re());
  if (s.im().is_zero()) return e;
  return e * exp(-(s.im() * Real::pi(s.bits())));
}

Real rel_diff(const BigComplex& a, const BigComplex& b) {
  Real d = abs(a - b);
  if (b.is_zero()) return d;
  return d / abs(b);
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << z.to_string(static_cast<int>(os.precision()));
}

}  // namespace hgfae
