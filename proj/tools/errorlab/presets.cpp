#include <stdexcept>

#include "lab.hpp"

namespace errorlab {

namespace {

AsymCase make_case(long bits, const std::string& a, const std::string& b, const std::string& c, const std::string& e1,
                   const std::string& e2, const std::string& e3, const std::string& lam) {
  AsymCase k;
  k.a0 = parse_complex(a, bits);
  k.b0 = parse_complex(b, bits);
  k.c0 = parse_complex(c, bits);
  k.eps1 = parse_real(e1, bits);
  k.eps2 = parse_real(e2, bits);
  k.eps3 = parse_real(e3, bits);
  k.lam = parse_complex(lam, bits);
  return k;
}

// z = start + k * step for k = 0..count-1, exact decimal steps
std::vector<BigComplex> steps(long bits, const std::string& start, const std::string& step, long count,
                              const std::string& imag = "0") {
  Real s = parse_real(start, bits), h = parse_real(step, bits), im = parse_real(imag, bits);
  std::vector<BigComplex> g;
  for (long k = 0; k < count; ++k) g.emplace_back(s + h * Real(k, bits), im);
  return g;
}

SweepSpec spec(const std::string& label, const AsymCase& c, std::vector<BigComplex> zs, std::vector<BigComplex> lams,
               std::vector<AeMethod> methods, const Precision& prec) {
  SweepSpec s;
  s.label = label;
  s.c = c;
  s.z_grid = std::move(zs);
  s.lambda_grid = std::move(lams);
  s.methods = std::move(methods);
  s.prec = prec;
  return s;
}

AsymCase fig2(long bits, const std::string& b) { return make_case(bits, "1", b, "2", "1/2", "0", "1", "400,200"); }

AsymCase fig5(long bits, char panel) {
  switch (panel) {
    case 'a': return make_case(bits, "0", "2", "1", "3/2", "0", "1", "50,75");
    case 'b': return make_case(bits, "0", "-2", "1", "2", "0", "1", "100");
    case 'c': return make_case(bits, "0", "5/2", "1", "3/2", "0", "1", "50");
    default: return make_case(bits, "0", "-1/2", "1", "2", "0", "1", "100,50");
  }
}

AsymCase fig7a(long bits, const std::string& eps) { return make_case(bits, "2", "1", "3", eps, "1", "0", "100"); }
AsymCase fig7b(long bits, const std::string& eps) {
  return make_case(bits, "2/3", "4/3", "7/3", eps, "1", "0", "100,50");
}

std::vector<BigComplex> fig7b_points(long bits) {
  std::vector<BigComplex> g;
  for (long k = 0; k < 20; ++k)
    g.emplace_back(Real(0.2, bits) + Real(k, bits) * Real(9, bits) / 100,
                   Real(0.1, bits) + Real(k, bits) * Real(45, bits) / 1000);
  return g;
}

std::vector<BigComplex> fig7a_points(long bits) {
  auto lo = steps(bits, "0.1", "0.05", 17);
  auto hi = steps(bits, "1.1", "0.05", 19);
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

std::vector<BigComplex> pair(long bits, const std::string& z1, const std::string& z2) {
  return {parse_complex(z1, bits), parse_complex(z2, bits)};
}

}  // namespace

std::vector<std::string> preset_ids() {
  return {"fig2a", "fig2b", "fig5a", "fig5b", "fig5c", "fig5d", "fig7a", "fig7b", "fig8"};
}

std::vector<SweepSpec> preset(const std::string& id, const Precision& prec) {
  long bits = prec.bits;
  auto one = [](const BigComplex& l) { return std::vector<BigComplex>{l}; };
  if (id == "fig2a") {
    auto c = fig2(bits, "1");
    return {spec(id, c, steps(bits, "0", "0.05", 81), one(c.lam), {AeMethod::AcLeading}, prec)};
  }
  if (id == "fig2b") {
    auto c = fig2(bits, "3/4");
    return {spec(id, c, steps(bits, "0", "0.05", 81, "0.25"), one(c.lam), {AeMethod::AcLeading}, prec)};
  }
  if (id.size() == 5 && id.rfind("fig5", 0) == 0 && id[4] >= 'a' && id[4] <= 'd') {
    auto c = fig5(bits, id[4]);
    return {spec(id, c, steps(bits, "0.02", "0.02", 49), one(c.lam), {AeMethod::AcFull, AeMethod::AcLimited}, prec)};
  }
  if (id == "fig7a") {
    std::vector<SweepSpec> out;
    for (auto e : {"1/2", "5/2"}) {
      auto c = fig7a(bits, e);
      out.push_back(spec(id + " eps=" + e, c, fig7a_points(bits), one(c.lam), {AeMethod::AbDominant}, prec));
    }
    return out;
  }
  if (id == "fig7b") {
    std::vector<SweepSpec> out;
    for (auto e : {"1/2", "5/2"}) {
      auto c = fig7b(bits, e);
      out.push_back(spec(id + " eps=" + e, c, fig7b_points(bits), one(c.lam), {AeMethod::AbComplex}, prec));
    }
    return out;
  }
  if (id == "fig8") {
    std::vector<double> scales{50, 100, 200, 400, 800};
    std::vector<SweepSpec> out;
    auto add = [&](const std::string& label, const AsymCase& c, std::vector<BigComplex> zs, AeMethod m) {
      out.push_back(spec("fig8 " + label, c, std::move(zs), ray_grid(c.lam, scales), {m}, prec));
    };
    add("fig2a", fig2(bits, "1"), pair(bits, "0.5", "3"), AeMethod::AcLeading);
    add("fig2b", fig2(bits, "3/4"), pair(bits, "0.5,0.25", "3,0.25"), AeMethod::AcLeading);
    for (char p : {'a', 'b', 'c', 'd'})
      add(std::string("fig5") + p, fig5(bits, p), pair(bits, "0.3", "0.9"), AeMethod::AcFull);
    for (auto e : {"1/2", "5/2"})
      add(std::string("fig7a eps=") + e, fig7a(bits, e), pair(bits, "0.5", "1.5"), AeMethod::AbDominant);
    for (auto e : {"1/2", "5/2"})
      add(std::string("fig7b eps=") + e, fig7b(bits, e), pair(bits, "0.2,0.1", "1.1,0.55"), AeMethod::AbComplex);
    return out;
  }
  throw std::invalid_argument("unknown preset: " + id);
}

}  // namespace errorlab
