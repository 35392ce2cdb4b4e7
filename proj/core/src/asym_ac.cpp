#include "hgfae/asym_ac.hpp"

#include <sstream>

#include "hgfae/gamma.hpp"

namespace hgfae {

void validate_case(const AsymCase& c) {
  if (!(c.lam.re() > 0)) fail(ErrorCode::ParameterDomain, "lambda must have a positive real part");
  int zeros = (c.eps1.is_zero() ? 1 : 0) + (c.eps2.is_zero() ? 1 : 0) + (c.eps3.is_zero() ? 1 : 0);
  if (zeros == 0) fail(ErrorCode::ParameterDomain, "one of eps1, eps2, eps3 must be zero");
  if (zeros == 3) fail(ErrorCode::ParameterDomain, "no parameter grows with lambda");
}

hgf::HgfInput case_input(const AsymCase& c, const BigComplex& z) {
  return hgf::make_input(c.a0 + c.eps1 * c.lam, c.b0 + c.eps2 * c.lam, c.c0 + c.eps3 * c.lam, z);
}

BigComplex case_hgf(const AsymCase& c, const BigComplex& z, const Precision& prec) {
  return hgf::hgf_eval(case_input(c, z), prec).value;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::LargeCOnly: return "large_c";
    case Regime::AcLeading: return "ac_leading";
    case Regime::AcFull: return "ac_full";
    case Regime::AbComplex: return "ab_complex";
    case Regime::AbDominant: return "ab_dominant";
    case Regime::AbNegative: return "ab_negative";
  }
  return "?";
}

}  // namespace hgfae

namespace hgfae::ac {

namespace {

long work_bits(const AsymCase& c, const BigComplex& z) {
  return std::max({c.a0.bits(), c.b0.bits(), c.c0.bits(), c.lam.bits(), z.bits(), c.eps1.bits()});
}

void require_ac(const AsymCase& c) {
  validate_case(c);
  if (!c.eps2.is_zero() || c.eps3 != 1) fail(ErrorCode::ParameterDomain, "expected the (eps, 0, 1) case");
}

std::optional<Warning> near_critical(const AsymCase& c, const BigComplex& z, const AcConfig& cfg) {
  Real inv = 1.0 / c.eps1;
  if (abs(z - BigComplex(inv)) < inv * cfg.exclusion) {
    std::ostringstream os;
    os << "z lies within " << cfg.exclusion << "/eps of 1/eps";
    return Warning{ErrorCode::NearCriticalZ, os.str()};
  }
  return std::nullopt;
}

AeResult single(Regime r, const char* label, const BigComplex& v) {
  AeResult out;
  out.regime = r;
  out.value = v;
  out.terms.emplace_back(label, v);
  return out;
}

// w^(-b), with w = 1 - eps z possibly exactly 0
BigComplex leading_power(const BigComplex& w, const BigComplex& b, long bits) {
  if (b.is_zero()) return BigComplex(Real(1, bits));
  if (w.is_zero()) {
    if (b.re() < 0) return BigComplex(Real(0, bits));
    fail(ErrorCode::NearCriticalZ, "(1 - eps z)^(-b) is singular at z = 1/eps");
  }
  return exp(-b * log(w));
}

std::optional<long> positive_integer(const BigComplex& x) {
  if (!x.is_integer() || !(x.re() > 0)) return std::nullopt;
  return x.re().to_long();
}

}  // namespace

AeResult ae_large_c_only(const AsymCase& c, const BigComplex& z) {
  validate_case(c);
  if (!c.eps1.is_zero() || !c.eps2.is_zero() || c.eps3 != 1)
    fail(ErrorCode::ParameterDomain, "expected the (0, 0, 1) case");
  return single(Regime::LargeCOnly, "leading", 1.0 + c.a0 * c.b0 * z / (c.c0 + c.lam));
}

AeResult ae_ac_leading(const AsymCase& c, const BigComplex& z, const AcConfig& cfg) {
  require_ac(c);
  if (!(c.eps1 > 0 && c.eps1 < 1)) fail(ErrorCode::ParameterDomain, "leading expansion requires 0 < eps < 1");
  BigComplex w = 1.0 - c.eps1 * z;
  BigComplex v = leading_power(w, c.b0, work_bits(c, z));
  AeResult out = single(Regime::AcLeading, "leading", v);
  out.warning = near_critical(c, z, cfg);
  return out;
}

Real h_eps(const Real& eps, const Real& x) {
  if (eps.is_zero() || eps == 1) fail(ErrorCode::ParameterDomain, "h_eps requires eps not in {0, 1}");
  if (x.is_zero() || x == 1) fail(ErrorCode::AtSingularity, "h_eps at x = 0 or 1");
  return pow(abs((x - 1.0) / (1.0 - eps)), 1.0 - eps) / (pow(eps, eps) * abs(x));
}

BigComplex h_eps(const Real& eps, const BigComplex& z) {
  if (eps.is_zero() || eps == 1) fail(ErrorCode::ParameterDomain, "h_eps requires eps not in {0, 1}");
  if (z.is_zero() || z == BigComplex(1)) fail(ErrorCode::AtSingularity, "h_eps at z = 0 or 1");
  BigComplex em1(eps - 1.0);
  BigComplex l = -(eps * log(eps)) - log(z) + (eps - 1.0) * (log(em1) - log(1.0 - z));
  return exp(l);
}

BigComplex residue_asym(const AsymCase& c, const BigComplex& z) {
  require_ac(c);
  if (!(c.eps1 > 1)) fail(ErrorCode::DomainViolation, "residue requires eps > 1");
  if (!positive_integer(c.b0)) fail(ErrorCode::DomainViolation, "residue requires b in N");
  if (z.is_zero() || z == BigComplex(1)) fail(ErrorCode::DomainViolation, "residue requires z not in {0, 1}");
  const Real& e = c.eps1;
  const BigComplex& L = c.lam;
  BigComplex l = (c.b0 - 1.0) * log(L) + (1.0 - c.c0 - L) * log(z) - log_gamma(c.b0);
  if (c.b0 != BigComplex(1)) l += (c.b0 - 1.0) * log(e * z - 1.0);
  l -= (c.a0 + c.b0 - c.c0 + (e - 1.0) * L) * log(1.0 - z);
  return -exp(l);
}

BigComplex residue_exact(const AsymCase& c, const BigComplex& z) {
  require_ac(c);
  auto b = positive_integer(c.b0);
  if (!b) fail(ErrorCode::DomainViolation, "residue requires b in N");
  if (z.is_zero() || z == BigComplex(1)) fail(ErrorCode::DomainViolation, "residue requires z not in {0, 1}");
  long n = *b - 1;
  long bits = work_bits(c, z);
  BigComplex t = 1.0 / z;
  BigComplex alpha = c.a0 - 1.0 + c.eps1 * c.lam;
  BigComplex beta = c.c0 - c.a0 - 1.0 - (c.eps1 - 1.0) * c.lam;
  BigComplex lt = log(t), lt1 = log(t - 1.0);
  // falling factorials of alpha and beta
  std::vector<BigComplex> fa(n + 1), fb(n + 1);
  fa[0] = fb[0] = BigComplex(Real(1, bits));
  for (long i = 1; i <= n; ++i) {
    fa[i] = fa[i - 1] * (alpha - static_cast<double>(i - 1));
    fb[i] = fb[i - 1] * (beta - static_cast<double>(i - 1));
  }
  BigComplex sum(Real(0, bits));
  Real binom(1, bits);
  for (long k = 0; k <= n; ++k) {
    BigComplex pw = exp((alpha - static_cast<double>(k)) * lt + (beta + static_cast<double>(k - n)) * lt1);
    sum += fa[k] * fb[n - k] * pw * binom;
    binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  // (-z)^(-b) / Gamma(b) with b an integer
  BigComplex pre = pow(-z, -*b) / gamma(c.b0);
  return pre * sum;
}

AeResult ae_ac_full(const AsymCase& c, const BigComplex& z, const AcConfig& cfg) {
  require_ac(c);
  if (!(c.eps1 > 1)) fail(ErrorCode::ParameterDomain, "full expansion requires eps > 1");
  if (z == BigComplex(1)) fail(ErrorCode::AtOne, "the second term is singular at z = 1");
  long bits = work_bits(c, z);
  const Real& e = c.eps1;
  const BigComplex& a = c.a0;
  const BigComplex& b = c.b0;
  const BigComplex& cc = c.c0;
  const BigComplex& L = c.lam;
  AeResult out;
  out.regime = Regime::AcFull;
  BigComplex t1 = leading_power(1.0 - e * z, b, bits);
  out.terms.emplace_back("leading", t1);
  out.value = t1;
  if (abs(z) > 1.0 / e) {
    BigComplex t2(Real(0, bits));
    BigComplex rg = reciprocal_gamma(b);
    if (!rg.is_zero()) {
      Real pi = Real::pi(bits);
      BigComplex l = BigComplex(log(pi * 2) / 2);
      l += -(a - 0.5 + e * L) * log(e);
      l += (a - cc + 0.5 + (e - 1.0) * L) * log(e - 1.0);
      l += (1.0 - cc - L) * log(z);
      if (b != BigComplex(1)) l += (b - 1.0) * log(e * z - 1.0);
      l += -(a + b - cc + (e - 1.0) * L) * log(1.0 - z);
      l += (b - 0.5) * log(L);
      t2 = rg * exp(l);
    }
    out.terms.emplace_back("pole_branch", t2);
    out.value += t2;
  }
  out.warning = near_critical(c, z, cfg);
  return out;
}

namespace {

BigComplex gamma_quotient(const std::vector<BigComplex>& num, const std::vector<BigComplex>& den) {
  for (const auto& d : den)
    if (d.is_nonpositive_integer()) return BigComplex(Real(0, d.bits()));
  BigComplex l(Real(0, num.empty() ? kDefaultBits : num[0].bits()));
  for (const auto& x : num) {
    if (x.is_nonpositive_integer()) fail(ErrorCode::DegenerateTransformation, "Gamma pole in the connection formula");
    l += log_gamma(x);
  }
  for (const auto& x : den) l -= log_gamma(x);
  return exp(l);
}

void reduce_into(const AsymCase& c, const BigComplex& z, const BigComplex& mult, Reduction& out, int depth) {
  if (depth > 4) fail(ErrorCode::DegenerateTransformation, "reduction did not terminate");
  std::ostringstream os;
  if (c.eps3 == 1 && !(c.eps1 < 0)) {
    out.terms.push_back({c, z, mult});
    return;
  }
  const BigComplex& L = c.lam;
  if (c.eps3 == 1) {
    // Pfaff: F(a,b;c;z) = (1-z)^(-b) F(c-a,b;c;z/(z-1))
    if (z == BigComplex(1)) fail(ErrorCode::DegenerateTransformation, "Pfaff map undefined at z = 1");
    AsymCase n = c;
    n.a0 = c.c0 - c.a0;
    n.eps1 = 1.0 - c.eps1;
    BigComplex m = c.b0.is_zero() ? mult : mult * exp(-c.b0 * log(1.0 - z));
    os << "pfaff: z -> z/(z-1), a0 -> c0-a0, eps -> 1-eps = " << n.eps1.to_double() << ", times (1-z)^(-b0)\n";
    out.recipe += os.str();
    reduce_into(n, z / (z - 1.0), m, out, depth + 1);
    return;
  }
  if (c.eps3 != -1) fail(ErrorCode::ParameterDomain, "eps3 must be 1 or -1");
  BigComplex a = c.a0 + c.eps1 * L;
  const BigComplex& b = c.b0;
  BigComplex cc = c.c0 - L;
  if (cc.is_integer() || (cc - a - b).is_integer())
    fail(ErrorCode::DegenerateTransformation, "connection formula needs c and c-a-b off the integers");
  if (!(c.eps1 + 1.0 > 0)) fail(ErrorCode::DegenerateTransformation, "first connection term has no large c");
  if (z.is_zero() || z == BigComplex(1)) fail(ErrorCode::DegenerateTransformation, "connection formula at z = 0 or 1");
  BigComplex common = gamma_quotient({a - cc + 1.0, b - cc + 1.0}, {1.0 - cc});
  // term in 1 - z, rescaled so that c grows like lam'
  AsymCase t1;
  Real g = c.eps1 + 1.0;
  t1.lam = L * g;
  t1.a0 = c.a0;
  t1.eps1 = c.eps1 / g;
  t1.b0 = b;
  t1.eps2 = Real(0, g.bits());
  t1.c0 = c.a0 + b - c.c0 + 1.0;
  t1.eps3 = Real(1, g.bits());
  BigComplex m1 = mult * common * gamma_quotient({}, {a + b - cc + 1.0});
  // term in z
  AsymCase t2;
  t2.lam = L;
  t2.a0 = 1.0 - c.a0;
  t2.eps1 = -c.eps1;
  t2.b0 = 1.0 - b;
  t2.eps2 = Real(0, g.bits());
  t2.c0 = 2.0 - c.c0;
  t2.eps3 = Real(1, g.bits());
  BigComplex m2 = -(mult * common * gamma_quotient({cc - 1.0}, {a, b})) *
                  exp((1.0 - cc) * log(z) + (cc - a - b) * log(1.0 - z));
  os << "connection: F = G1 * F(a, b; a+b-c+1; 1-z) + G2 * z^(1-c) (1-z)^(c-a-b) F(1-a, 1-b; 2-c; z); "
     << "first term lam -> (1+eps) lam, eps -> eps/(1+eps) = " << t1.eps1.to_double() << "; second term eps -> "
     << t2.eps1.to_double() << "\n";
  out.recipe += os.str();
  reduce_into(t1, 1.0 - z, m1, out, depth + 1);
  reduce_into(t2, z, m2, out, depth + 1);
}

}  // namespace

Reduction reduce_negative_eps(const AsymCase& c, const BigComplex& z) {
  validate_case(c);
  if (!c.eps2.is_zero()) fail(ErrorCode::ParameterDomain, "expected eps2 = 0");
  Reduction out;
  reduce_into(c, z, BigComplex(Real(1, work_bits(c, z))), out, 0);
  if (out.recipe.empty()) out.recipe = "identity\n";
  return out;
}

BigComplex evaluate_reduction(const Reduction& r, const Precision& prec) {
  BigComplex sum(Real(0, prec.bits));
  for (const auto& t : r.terms) sum += t.multiplier * case_hgf(t.c, t.z, prec);
  return sum;
}

}  // namespace hgfae::ac
