#include "lab.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "hgfae/asym_ab.hpp"
#include "hgfae/asym_ac.hpp"
#include "hgfae/gamma.hpp"
#include "hgfae/hgf.hpp"
#include "hgfae/msd.hpp"

namespace errorlab {

using hgfae::ErrorCode;
using hgfae::fail;

Real relative_error(const BigComplex& ae, const BigComplex& ref) {
  if (ref.is_zero()) fail(ErrorCode::ReferenceZero, "reference value is zero");
  return abs(1.0 - ae / ref) * 100.0;
}

const char* to_string(AeMethod m) {
  switch (m) {
    case AeMethod::LargeC: return "large_c";
    case AeMethod::AcLeading: return "ac_leading";
    case AeMethod::AcLimited: return "ac_limited";
    case AeMethod::AcFull: return "ac_full";
    case AeMethod::AbComplex: return "ab_complex";
    case AeMethod::AbDominant: return "ab_dominant";
    case AeMethod::AbNegative: return "ab_negative";
  }
  return "unknown";
}

const char* to_string(Oracle o) {
  switch (o) {
    case Oracle::Series: return "series";
    case Oracle::Quadrature: return "quadrature";
    case Oracle::SdIntegrate: return "sd_integrate";
  }
  return "unknown";
}

std::optional<AeMethod> parse_method(const std::string& s) {
  for (auto m : {AeMethod::LargeC, AeMethod::AcLeading, AeMethod::AcLimited, AeMethod::AcFull, AeMethod::AbComplex,
                 AeMethod::AbDominant, AeMethod::AbNegative})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

std::optional<Oracle> parse_oracle(const std::string& s) {
  for (auto o : {Oracle::Series, Oracle::Quadrature, Oracle::SdIntegrate})
    if (s == to_string(o)) return o;
  return std::nullopt;
}

BigComplex ae_value(AeMethod m, const AsymCase& c, const BigComplex& z, std::optional<hgfae::Warning>& warning) {
  hgfae::AeResult r;
  switch (m) {
    case AeMethod::LargeC: r = hgfae::ac::ae_large_c_only(c, z); break;
    case AeMethod::AcLeading: r = hgfae::ac::ae_ac_leading(c, z); break;
    case AeMethod::AcLimited:
      // the leading term of the full expansion alone
      r = hgfae::ac::ae_ac_full(c, z);
      r.value = r.terms.front().second;
      break;
    case AeMethod::AcFull: r = hgfae::ac::ae_ac_full(c, z); break;
    case AeMethod::AbComplex: r = hgfae::ab::ae_ab_complex(c, z); break;
    case AeMethod::AbDominant: r = hgfae::ab::ae_ab_dominant(c, z); break;
    case AeMethod::AbNegative: r = hgfae::ab::ae_ab_negative(c, z); break;
  }
  warning = r.warning;
  return r.value;
}

BigComplex sd_reference(const AsymCase& c, const BigComplex& z, const Precision& prec) {
  namespace msd = hgfae::msd;
  hgfae::validate_case(c);
  if (!c.eps2.is_zero() || c.eps3 != 1 || !(c.eps1 > 0) || !(c.eps1 < 1))
    fail(ErrorCode::ParameterDomain, "sd_reference covers (eps, 0, 1) with 0 < eps < 1");
  long bits = prec.bits;
  Real eps = c.eps1.with_bits(bits);
  BigComplex lam = c.lam.with_bits(bits);
  auto pf = msd::make_phase(msd::PhaseKind::AcSmall, eps);
  auto sd = msd::ac_saddle(pf, lam);
  auto path = msd::sd_path_trace(pf, sd, lam, Real(5, bits), Real(0.05, bits));
  auto closed = msd::close_path(path, BigComplex(Real(0, bits)), BigComplex(Real(1, bits)));
  msd::Integrand f{msd::IntegrandKind::EulerA, c.a0, c.b0, c.c0, z};
  BigComplex I = msd::sd_integrate(pf, f, closed, lam, prec);
  BigComplex a = c.a0 + eps * lam, cc = c.c0 + lam;
  return I * exp(hgfae::log_gamma(cc, prec) - hgfae::log_gamma(a, prec) - hgfae::log_gamma(cc - a, prec));
}

BigComplex oracle_value(Oracle o, const AsymCase& c, const BigComplex& z, const Precision& prec) {
  switch (o) {
    case Oracle::Series: return hgfae::case_hgf(c, z, prec);
    case Oracle::Quadrature: return hgfae::hgf::hgf_quadrature_A(hgfae::case_input(c, z), prec).value;
    case Oracle::SdIntegrate: return sd_reference(c, z, prec);
  }
  return {};
}

void validate_spec(const SweepSpec& s) {
  if (s.z_grid.empty()) fail(ErrorCode::ParameterDomain, "empty z grid");
  if (s.lambda_grid.empty()) fail(ErrorCode::ParameterDomain, "empty lambda grid");
  if (s.methods.empty()) fail(ErrorCode::ParameterDomain, "no methods");
  s.prec.validate();
}

namespace {

std::string error_status(const std::exception& e) {
  if (auto* he = dynamic_cast<const hgfae::Error*>(&e)) return std::string("error:") + hgfae::to_string(he->code());
  return "error:exception";
}

std::vector<Row> run_cell(const SweepSpec& spec, const BigComplex& z, const BigComplex& lam) {
  AsymCase c = spec.c;
  c.lam = lam;
  std::optional<BigComplex> ref;
  std::string ref_status;
  try {
    ref = oracle_value(spec.oracle, c, z, spec.prec);
  } catch (const std::exception& e) {
    ref_status = error_status(e);
  }
  std::vector<Row> rows;
  for (AeMethod m : spec.methods) {
    Row row;
    row.z = z;
    row.lam = lam;
    row.method = m;
    row.hgf = ref;
    std::vector<std::string> notes;
    try {
      std::optional<hgfae::Warning> w;
      row.ae = ae_value(m, c, z, w);
      if (w) notes.emplace_back(hgfae::to_string(w->code));
    } catch (const std::exception& e) {
      notes.push_back(error_status(e));
      row.hard_error = true;
    }
    if (!ref) {
      notes.push_back("oracle_" + ref_status);
      row.hard_error = true;
    }
    if (row.ae && ref) {
      try {
        row.rel_err_pct = relative_error(*row.ae, *ref);
      } catch (const std::exception& e) {
        notes.push_back(error_status(e));
      }
    }
    if (!notes.empty()) {
      std::string s;
      for (size_t i = 0; i < notes.size(); ++i) s += (i ? ";" : "") + notes[i];
      row.status = s;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<Row> run_sweep(const SweepSpec& spec, unsigned jobs) {
  validate_spec(spec);
  size_t nl = spec.lambda_grid.size();
  size_t cells = spec.z_grid.size() * nl;
  std::vector<std::vector<Row>> out(cells);
  auto work = [&](size_t i) { out[i] = run_cell(spec, spec.z_grid[i / nl], spec.lambda_grid[i % nl]); };
  if (jobs <= 1 || cells == 1) {
    for (size_t i = 0; i < cells; ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (size_t i = next++; i < cells; i = next++) work(i);
      });
    for (auto& t : pool) t.join();
  }
  std::vector<Row> rows;
  for (auto& cell : out)
    for (auto& r : cell) rows.push_back(std::move(r));
  return rows;
}

std::vector<BigComplex> axis_grid(const Real& start, const Real& stop, long count, const Real& imag) {
  if (count < 1) fail(ErrorCode::ParameterDomain, "grid count must be positive");
  std::vector<BigComplex> g;
  for (long k = 0; k < count; ++k) {
    Real x = count == 1 ? start : start + (stop - start) * Real(k, start.bits()) / Real(count - 1, start.bits());
    g.emplace_back(x, imag);
  }
  return g;
}

std::vector<BigComplex> ray_grid(const BigComplex& lam, const std::vector<double>& scales) {
  std::vector<BigComplex> g;
  BigComplex dir = lam / lam.re();
  for (double s : scales) g.push_back(dir * Real(s, lam.bits()));
  return g;
}

Real parse_real(const std::string& s, long bits) {
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return Real::from_string(s.substr(0, slash), bits) / Real::from_string(s.substr(slash + 1), bits);
  return Real::from_string(s, bits);
}

BigComplex parse_complex(const std::string& s, long bits) {
  auto comma = s.find(',');
  if (comma != std::string::npos) return BigComplex(parse_real(s.substr(0, comma), bits), parse_real(s.substr(comma + 1), bits));
  if (s.find('/') != std::string::npos) return BigComplex(parse_real(s, bits));
  return BigComplex::parse(s, bits);
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  } else {
    // decimal: digits after the point over a power of ten
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class num, den;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    q = mpq_class(num, den);
  }
  q.canonicalize();
  return q;
}

std::string format_real(const Real& x) { return x.to_string(0); }

std::string describe_case(const AsymCase& c) {
  std::ostringstream os;
  os << "a0=" << c.a0.to_string(17) << " b0=" << c.b0.to_string(17) << " c0=" << c.c0.to_string(17)
     << " eps=(" << c.eps1.to_string(17) << ", " << c.eps2.to_string(17) << ", " << c.eps3.to_string(17) << ")";
  return os.str();
}

}  // namespace errorlab
