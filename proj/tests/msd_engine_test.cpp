#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hgfae/asym_ab.hpp"
#include "hgfae/error.hpp"
#include "hgfae/gamma.hpp"
#include "hgfae/msd.hpp"
#include "oracles.hpp"

using namespace hgfae;
using namespace hgfae::msd;
using oracle::rel;

namespace {

const Precision P = Precision::with_bits(256);

Real R(double x) { return Real(x, 256); }

bool angles_match(std::vector<Real> got, std::vector<double> want) {
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i].to_double() - want[i]) > 1e-12) return false;
  return true;
}

// F(a0 + eps lam, b0; c0 + lam; z) from a traced path, as an independent
// consumer of the engine
BigComplex traced_hgf(double a0, double b0, double c0, double eps, const BigComplex& lam, const BigComplex& z) {
  auto pf = make_phase(PhaseKind::AcSmall, R(eps));
  auto sd = ac_saddle(pf, lam);
  auto path = close_path(sd_path_trace(pf, sd, lam, R(5), R(0.05)), BigComplex(R(0)), BigComplex(R(1)));
  Integrand f{IntegrandKind::EulerA, BigComplex(a0), BigComplex(b0), BigComplex(c0), z};
  BigComplex I = sd_integrate(pf, f, path, lam, P);
  BigComplex a = BigComplex(a0) + R(eps) * lam, c = BigComplex(c0) + lam;
  return I * exp(log_gamma(c, P) - log_gamma(a, P) - log_gamma(c - a, P));
}

}  // namespace

TEST_CASE("AC phase at its saddle") {
  auto pf = make_phase(PhaseKind::AcSmall, R(0.3));
  BigComplex t0(R(0.3));
  CHECK(abs(phase_deriv(pf, t0, 1)) < Real(1e-70));
  BigComplex g2 = phase_deriv(pf, t0, 2);
  CHECK(rel(g2, BigComplex(1 / (R(0.3) * (R(0.3) - 1)))) < 1e-70);
  CHECK(g2.re().to_double() == doctest::Approx(-4.7619).epsilon(1e-4));
}

TEST_CASE("AB phase vanishes at t_plus") {
  BigComplex z = BigComplex(R(2)) / BigComplex(R(3));
  auto pf = make_phase(PhaseKind::Ab, R(2), z);
  auto s = ab::saddle_points_ab(R(2), z);
  CHECK(abs(phase_deriv(pf, s.t_plus, 1)) < Real(1e-70));
  // t_minus sits on the cut for real z; use a complex z for it
  BigComplex w(0.6, 0.4);
  auto s2 = ab::saddle_points_ab(R(2), w);
  auto pf2 = make_phase(PhaseKind::Ab, R(2), w);
  CHECK(abs(phase_deriv(pf2, s2.t_plus, 1)) < Real(1e-70));
  CHECK(abs(phase_deriv(pf2, s2.t_minus, 1)) < Real(1e-70));
}

TEST_CASE("steepest descent angles") {
  Real pi = Real::pi(256);
  CHECK(angles_match(steepest_angles(1, pi), {0.0, M_PI}));
  CHECK(angles_match(steepest_angles(1, R(0)), {M_PI / 2, 3 * M_PI / 2}));
  CHECK(angles_match(steepest_angles(2, R(0)), {M_PI / 3, M_PI, 5 * M_PI / 3}));
  auto sd = ac_saddle(make_phase(PhaseKind::AcSmall, R(0.3)), BigComplex(R(40)));
  CHECK(sd.order == 1);
  CHECK(angles_match(sd.angles, {0.0, M_PI}));
  auto lg = ac_saddle(make_phase(PhaseKind::AcLarge, R(3)), BigComplex(R(40)));
  CHECK(angles_match(lg.angles, {M_PI / 2, 3 * M_PI / 2}));
}

TEST_CASE("derivatives against central differences") {
  struct K {
    PhaseKind kind;
    double eps;
    BigComplex z;
  };
  std::vector<K> kinds = {{PhaseKind::AcSmall, 0.3, BigComplex(0)},
                          {PhaseKind::AcLarge, 2.5, BigComplex(0)},
                          {PhaseKind::Ab, 0.5, BigComplex(0.4, 0.3)},
                          {PhaseKind::AbNeg, 2.5, BigComplex(0.7, -0.2)},
                          {PhaseKind::Gaussian, 1.0, BigComplex(0)},
                          {PhaseKind::Stirling, 1.0, BigComplex(0)}};
  Real h = R(1e-10);
  BigComplex hc(h);
  for (const auto& k : kinds) {
    auto pf = make_phase(k.kind, R(k.eps), k.z);
    int checked = 0;
    while (checked < 50) {
      BigComplex t(oracle::uniform(-2.0, 3.0), oracle::uniform(0.1, 2.0) * (oracle::uniform(0, 1) < 0.5 ? -1 : 1));
      bool near_sing = false;
      for (const auto& s : singular_points(pf)) near_sing |= abs(t - s) < Real(0.1);
      if (near_sing) continue;
      BigComplex d1 = (phase_eval(pf, t + hc) - phase_eval(pf, t - hc)) / (2 * hc);
      BigComplex d2 = (phase_eval(pf, t + hc) - 2 * phase_eval(pf, t) + phase_eval(pf, t - hc)) / (hc * hc);
      CHECK(rel(phase_deriv(pf, t, 1), d1) < 1e-15);
      CHECK(rel(phase_deriv(pf, t, 2), d2) < 1e-15);
      ++checked;
    }
  }
}

TEST_CASE("phase domain errors") {
  auto pf = make_phase(PhaseKind::AcSmall, R(0.3));
  try {
    phase_eval(pf, BigComplex(2));
    FAIL("expected OnBranchCut");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnBranchCut);
  }
  try {
    phase_eval(pf, BigComplex(0));
    FAIL("expected AtSingularity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AtSingularity);
  }
  try {
    make_phase(PhaseKind::AcSmall, R(1));
    FAIL("expected ParameterDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParameterDomain);
  }
}

TEST_CASE("Gaussian saddle") {
  auto pf = make_phase(PhaseKind::Gaussian, R(1));
  Integrand one{IntegrandKind::One, {}, {}, {}, {}};
  for (double l : {1.0, 7.0, 300.0}) {
    BigComplex lam(R(l));
    auto sd = make_saddle(pf, BigComplex(R(0)), lam);
    CHECK(rel(saddle_approx(pf, one, sd, lam), BigComplex(sqrt(Real::pi(256) / R(l)))) < 1e-70);
  }
  Polyline seg;
  seg.points = {BigComplex(R(-6)), BigComplex(R(6))};
  seg.lam = BigComplex(R(1));
  BigComplex I = sd_integrate(pf, one, seg, seg.lam, P);
  CHECK(rel(I, BigComplex(sqrt(Real::pi(256)))) < 1e-15);
}

TEST_CASE("Stirling saddle") {
  auto pf = make_phase(PhaseKind::Stirling, R(1));
  Integrand one{IntegrandKind::One, {}, {}, {}, {}};
  double prev = 1;
  for (double l : {10.0, 20.0, 40.0, 80.0}) {
    BigComplex lam(R(l));
    auto sd = make_saddle(pf, BigComplex(R(1)), lam);
    BigComplex approx = saddle_approx(pf, one, sd, lam);
    CHECK(rel(approx, BigComplex(exp(R(-l)) * sqrt(2 * Real::pi(256) / R(l)))) < 1e-70);
    // Gamma(lam + 1) = lam^(lam+1) * integral
    BigComplex g = exp(log_gamma(lam + 1, P) - (lam + 1) * log(lam));
    double d = rel(approx, g);
    CHECK(d == doctest::Approx(1 / (12 * l)).epsilon(0.05));
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("trace along the real segment for real lambda") {
  auto pf = make_phase(PhaseKind::AcSmall, R(0.5));
  BigComplex lam(R(40));
  auto sd = ac_saddle(pf, lam);
  auto path = sd_path_trace(pf, sd, lam, R(5), R(0.05));
  REQUIRE(path.points.size() > 5);
  for (const auto& t : path.points) {
    CHECK(abs(t.im()) < Real(1e-30));
    CHECK(t.re() > 0);
    CHECK(t.re() < 1);
  }
}

TEST_CASE("AC large trace is vertical at the saddle") {
  auto pf = make_phase(PhaseKind::AcLarge, R(3));
  BigComplex lam(R(40));
  auto path = sd_path_trace(pf, ac_saddle(pf, lam), lam, R(2), R(0.02));
  int near = 0;
  for (const auto& t : path.points) {
    Real dy = abs(t.im());
    if (dy > Real(0.2) || dy.is_zero()) continue;
    ++near;
    CHECK(abs(t.re() - 3) < dy * dy);
  }
  CHECK(near > 4);
}

TEST_CASE("trace invariants") {
  struct C {
    PhaseKind kind;
    double eps;
    BigComplex lam;
  };
  for (const auto& c : {C{PhaseKind::AcSmall, 0.5, BigComplex(400.0, 200.0)}, C{PhaseKind::AcSmall, 0.3, BigComplex(50.0, -80.0)},
                        C{PhaseKind::AcLarge, 1.5, BigComplex(50.0, 75.0)}}) {
    auto pf = make_phase(c.kind, R(c.eps));
    auto sd = ac_saddle(pf, c.lam);
    auto path = sd_path_trace(pf, sd, c.lam, R(3), R(0.05));
    const BigComplex& g0 = path.lam_g[path.saddle_index];
    for (size_t i = 0; i < path.points.size(); ++i) {
      const auto& v = path.lam_g[i];
      if (!v.is_finite()) continue;
      CHECK(abs(v.im() - g0.im()) < Real(1e-30));
    }
    for (size_t i = path.saddle_index; i + 1 < path.points.size(); ++i)
      CHECK(path.lam_g[i + 1].re() < path.lam_g[i].re());
    for (size_t i = path.saddle_index; i > 0; --i) CHECK(path.lam_g[i - 1].re() < path.lam_g[i].re());
  }
}

TEST_CASE("closing segments and polyline output") {
  auto pf = make_phase(PhaseKind::AcSmall, R(0.5));
  BigComplex lam(R(20));
  auto path = sd_path_trace(pf, ac_saddle(pf, lam), lam, R(1), R(0.1));
  auto closed = close_path(path, BigComplex(R(0)), BigComplex(R(1)));
  CHECK(closed.closed_at_start);
  CHECK(closed.closed_at_end);
  CHECK(closed.points.front().is_zero());
  CHECK(closed.points.back() == BigComplex(1));
  CHECK(closed.points[closed.saddle_index] == path.points[path.saddle_index]);
  std::ostringstream os;
  write_polyline_csv(os, path);
  CHECK(os.str().rfind("idx,t_re,t_im,re_lg,im_lg\n", 0) == 0);
}

TEST_CASE("traced integral reproduces hgf") {
  BigComplex v = traced_hgf(1, 1, 2, 0.5, BigComplex(R(40)), BigComplex(R(0.3)));
  BigComplex ref = hgf::hgf_eval(hgf::make_input(BigComplex(21), BigComplex(1), BigComplex(42), BigComplex(R(0.3))), P)
                       .value;
  CHECK(rel(v, ref) < 1e-25);
  // complex lambda crosses 1/z-free region off the axis
  BigComplex lam(200.0, 100.0), z(0.7, 0.4);
  BigComplex w = traced_hgf(1, 0.5, 2, 0.5, lam, z);
  BigComplex a = BigComplex(1) + R(0.5) * lam, c = BigComplex(2) + lam;
  CHECK(rel(w, hgf::hgf_eval(hgf::make_input(a, BigComplex(0.5), c, z), P).value) < 1e-25);
}

TEST_CASE("saddle approximation converges to the traced integral at rate 1/lambda") {
  auto pf = make_phase(PhaseKind::AcSmall, R(0.5));
  Integrand f{IntegrandKind::EulerA, BigComplex(1), BigComplex(1), BigComplex(2), BigComplex(R(0.3))};
  std::vector<double> dev;
  for (double l : {50.0, 100.0, 200.0, 400.0}) {
    BigComplex lam(R(l));
    auto sd = ac_saddle(pf, lam);
    auto path = close_path(sd_path_trace(pf, sd, lam, R(5), R(0.05)), BigComplex(R(0)), BigComplex(R(1)));
    dev.push_back(rel(saddle_approx(pf, f, sd, lam), sd_integrate(pf, f, path, lam, P)));
  }
  for (size_t i = 1; i < dev.size(); ++i) CHECK(dev[i] < dev[i - 1]);
  double slope = std::log(dev.back() / dev.front()) / std::log(8.0);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("traced path integrates at a lower precision") {
  auto pf = make_phase(PhaseKind::AcSmall, R(0.5));
  Integrand f{IntegrandKind::EulerA, BigComplex(1), BigComplex(1), BigComplex(2), BigComplex(R(0.3))};
  BigComplex lam(R(100));
  auto sd = ac_saddle(pf, lam);
  auto path = close_path(sd_path_trace(pf, sd, lam, R(5), R(0.05)), BigComplex(R(0)), BigComplex(R(1)));
  BigComplex fine = sd_integrate(pf, f, path, lam, P);
  BigComplex coarse = sd_integrate(pf, f, path, lam, Precision::with_bits(128));
  CHECK(rel(coarse, fine) < 1e-30);
}

TEST_CASE("dominance examples") {
  Real pi = Real::pi(256);
  BigComplex z1 = BigComplex::polar(R(3), -pi / 6);
  CHECK(critical_point_dominance(R(0.5), z1, R(0.3)) == Dominance::SaddleDominates);
  CHECK(critical_point_dominance(R(0.5), BigComplex(R(3)), R(0)) == Dominance::SaddleDominates);
  CHECK(critical_point_dominance(R(0.5), BigComplex(R(2)), R(0)) == Dominance::Inconclusive);
  CHECK(critical_point_dominance(R(0.5), BigComplex(R(2)), R(0.4)) == Dominance::Inconclusive);
}

TEST_CASE("sign of the dominance function by half-plane") {
  Real pi = Real::pi(256);
  for (int ie = 1; ie <= 9; ++ie) {
    Real eps = R(ie / 10.0);
    for (int ir = 0; ir < 5; ++ir) {
      Real r = (1 / eps) * R(1.05 + 0.5 * ir);
      for (int it = 1; it < 8; ++it) {
        Real th = pi / 2 * R(it / 8.0);
        CHECK(dominance_f(eps, r, -th) > 0);
        CHECK(dominance_f(eps, r, th) < 0);
        CHECK(dominance_f_dr(eps, r, -th) > 0);
        CHECK(dominance_f_dr(eps, r, th) < 0);
      }
    }
  }
  // derivative agrees with a finite difference
  Real h = R(1e-20);
  Real e = R(0.4), r = R(4), th = R(-0.7);
  Real fd = (dominance_f(e, r + h, th) - dominance_f(e, r - h, th)) / (2 * h);
  CHECK(rel(dominance_f_dr(e, r, th), fd) < 1e-30);
}
