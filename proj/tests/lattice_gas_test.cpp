#include <cmath>

#include "doctest.h"
#include "hgfae/asym_ab.hpp"
#include "hgfae/error.hpp"
#include "hgfae/lattice_gas.hpp"
#include "oracles.hpp"

using namespace hgfae;
using namespace hgfae::lattice;
using oracle::rel;

namespace {

const Precision P = Precision::with_bits(256);

LatticeGasSystem sys(unsigned long N, unsigned long t, unsigned long p, mpq_class on = {1, 2},
                     mpq_class off = {1, 2}) {
  return LatticeGasSystem{N, t, p, on, off};
}

// P_on = P_off = 1/2 gives zeta = 2; zeta = 5 needs P_on / P_off = 4
LatticeGasSystem sys_zeta(unsigned long N, unsigned long t, unsigned long p, int zeta) {
  if (zeta == 1) return sys(N, t, p, 1, 1);
  return sys(N, t, p, mpq_class(1, 2), mpq_class(1, 2 * (zeta - 1)));
}

Real to_real(const mpq_class& q) {
  Real r(0, 256);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const mpz_class& q) { return to_real(mpq_class(q)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ReferenceZero;
}

double dev(const PartitionAe& ae, const LatticeGasSystem& s) { return rel(ae.value, partition_closed(s, P)); }

// p(m|n) summed over m = 0..M
Real kerr_mass(const KerrChannel& ch, unsigned long n, unsigned long M) {
  Real s(0, 256);
  for (unsigned long m = 0; m <= M; ++m) s += kerr_emission_prob(ch, m, n, P).re();
  return s;
}

}  // namespace

TEST_CASE("zeta variable") {
  CHECK(zeta_variable(sys(10, 1, 1)) == 2);
  CHECK(zeta_variable(sys(10, 1, 1, 1, 1)) == 1);
  CHECK(zeta_variable(sys(10, 1, 1, 1, mpq_class(1, 3))) == 3);
  CHECK(zeta_variable(sys_zeta(10, 1, 1, 5)) == 5);
}

TEST_CASE("system validation") {
  CHECK(code_of([] { validate_system(sys(5, 6, 1)); }) == ErrorCode::DomainViolation);
  CHECK(code_of([] { validate_system(sys(5, 1, 1, mpq_class(3, 2), 1)); }) == ErrorCode::DomainViolation);
  CHECK(code_of([] { validate_system(sys(5, 1, 1, mpq_class(1, 2), 0)); }) == ErrorCode::DomainViolation);
  CHECK_NOTHROW(validate_system(sys(5, 5, 0)));
}

TEST_CASE("brute force small cases") {
  CHECK(partition_bruteforce(sys(10, 3, 2)) == 75);
  CHECK(partition_closed_rational(sys(10, 3, 2)) == 75);
  CHECK(rel(partition_closed(sys(10, 3, 2), P), BigComplex(75)) < 1e-70);
  for (unsigned long N = 1; N <= 12; ++N)
    for (unsigned long p = 0; p <= N; ++p) {
      CHECK(partition_bruteforce(sys(N, 0, p)) == mpq_class(binomial(N, p)));
      // P_on = 1: every trapped particle binds, Vandermonde gives C(N, p)
      for (unsigned long t = 0; t + p <= N; ++t)
        CHECK(partition_bruteforce(sys(N, t, p, 1, 1)) == mpq_class(binomial(N, p)));
    }
  CHECK(partition_closed_rational(sys(9, 4, 0)) == 1);
  CHECK(rel(partition_closed(sys(9, 4, 0), P), BigComplex(1)) < 1e-70);
}

TEST_CASE("brute force guards") {
  CHECK(code_of([] { partition_bruteforce(sys(10, 6, 5)); }) == ErrorCode::ComplementRequired);
  CHECK(code_of([] { partition_closed(sys(10, 6, 5), P); }) == ErrorCode::ComplementRequired);
  CHECK(code_of([] { partition_bruteforce(sys(20000, 6000, 6000)); }) == ErrorCode::SizeGuard);
}

TEST_CASE("closed form equals brute force exactly for small systems") {
  long cases = 0;
  for (int zeta : {1, 2, 5})
    for (unsigned long N = 0; N <= 14; ++N)
      for (unsigned long t = 0; t <= N; ++t)
        for (unsigned long p = 0; p + t <= N; ++p) {
          auto s = sys_zeta(N, t, p, zeta);
          REQUIRE(partition_closed_rational(s) == partition_bruteforce(s));
          ++cases;
        }
  // Boltzmann ratio below zero, zeta = 1/2
  for (unsigned long N = 0; N <= 14; ++N)
    for (unsigned long t = 0; t <= N; ++t)
      for (unsigned long p = 0; p + t <= N; ++p) {
        REQUIRE(partition_closed_rational(N, t, p, mpq_class(1, 2)) ==
                partition_bruteforce(N, t, p, mpq_class(-1, 2)));
        ++cases;
      }
  CHECK(cases > 2000);
}

TEST_CASE("floating closed form matches the rational one") {
  for (auto s : {sys_zeta(30, 10, 12, 2), sys_zeta(30, 7, 20, 5), sys_zeta(25, 25, 0, 2), sys_zeta(28, 1, 27, 5)})
    CHECK(rel(partition_closed(s, P), BigComplex(to_real(partition_closed_rational(s)))) < 1e-60);
}

TEST_CASE("symmetry and positivity") {
  // F is symmetric in p and t; Z carries C(N-t, p), so the symmetric
  // quantities are Z / C(N-t, p) and Z C(N, t) (trap placements counted)
  for (int zeta : {1, 2, 5})
    for (unsigned long N = 1; N <= 16; ++N)
      for (unsigned long t = 0; t <= N; ++t)
        for (unsigned long p = 0; p + t <= N; ++p) {
          auto a = sys_zeta(N, t, p, zeta), b = sys_zeta(N, p, t, zeta);
          mpq_class za = partition_bruteforce(a), zb = partition_bruteforce(b);
          CHECK(za * mpq_class(binomial(N, t)) == zb * mpq_class(binomial(N, p)));
          CHECK(za / mpq_class(binomial(N - t, p)) == zb / mpq_class(binomial(N - p, t)));
          CHECK(partition_closed_rational(a) / mpq_class(binomial(N - t, p)) ==
                partition_closed_rational(b) / mpq_class(binomial(N - p, t)));
          CHECK(za > 0);
        }
  auto a = sys_zeta(3000, 2000, 1000, 2), b = sys_zeta(3000, 1000, 2000, 2);
  BigComplex fa = partition_closed(a, P) / to_real(binomial(1000, 1000));
  BigComplex fb = partition_closed(b, P) / to_real(binomial(2000, 2000));
  CHECK(rel(fa, fb) < 1e-50);
  CHECK(partition_closed(a, P).re() > 0);
}

TEST_CASE("dilute regime") {
  auto s = sys_zeta(1000000, 10, 10, 2);
  auto r = partition_ae_dilute(s, P);
  CHECK(!r.warning);
  double d1 = dev(r, s);
  CHECK(d1 < 1e-2);
  auto s2 = sys_zeta(2000000, 10, 10, 2);
  CHECK(dev(partition_ae_dilute(s2, P), s2) < d1);
  CHECK(rel(partition_ae_dilute(sys_zeta(1000, 0, 7, 2), P).value, BigComplex(to_real(binomial(1000, 7)))) < 1e-70);
  CHECK(rel(partition_ae_dilute(sys_zeta(1000, 7, 0, 2), P).value, BigComplex(1)) < 1e-70);
  auto crowded = partition_ae_dilute(sys_zeta(1000, 100, 100, 2), P);
  REQUIRE(crowded.warning);
  CHECK(crowded.warning->code == ErrorCode::RegimeGuard);
}

TEST_CASE("trapping regime") {
  auto s = sys_zeta(30000, 10000, 10, 2);
  double d1 = dev(partition_ae_trapping(s, P), s);
  CHECK(d1 < 1e-2);
  auto s2 = sys_zeta(60000, 20000, 10, 2);
  CHECK(dev(partition_ae_trapping(s2, P), s2) < d1);
  // p = 1: F(-1, -t; c; z) = 1 + t z / c is linear with c = N - t, the AE
  // uses N - 1 - t
  for (int zeta : {1, 2, 5}) {
    auto one = sys_zeta(500, 120, 1, zeta);
    Real z(zeta, 256);
    Real ae = Real(380, 256) * (1 + Real(120, 256) * z / Real(379, 256));
    Real exact = Real(380, 256) * (1 + Real(120, 256) * z / Real(380, 256));
    CHECK(rel(partition_ae_trapping(one, P).value, BigComplex(ae)) < 1e-70);
    CHECK(rel(partition_closed(one, P), BigComplex(exact)) < 1e-70);
    CHECK(partition_closed_rational(one) == mpq_class(380) + mpq_class(120 * zeta));
  }
  // p and t swapped when the particles outnumber the traps
  auto sw = partition_ae_trapping(sys_zeta(30000, 10, 10000, 2), P);
  CHECK(sw.form == "(1 + p z / (N - p - t))^t");
  CHECK(rel(sw.value, partition_closed(sys_zeta(30000, 10, 10000, 2), P)) < 1e-2);
  CHECK(code_of([] { partition_ae_trapping(sys_zeta(100, 60, 40, 2), P); }) == ErrorCode::DomainViolation);
  auto big = partition_ae_trapping(sys_zeta(100000, 20000, 500, 2), P);
  REQUIRE(big.warning);
  CHECK(big.warning->code == ErrorCode::RegimeGuard);
}

TEST_CASE("dense regime") {
  double prev = 1;
  for (unsigned long N : {300ul, 3000ul}) {
    auto s = sys_zeta(N, 2 * N / 3, N / 3, 2);
    auto r = partition_ae_dense(s, P);
    CHECK(!r.warning);
    double d = dev(r, s);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 1e-2);
  // p = t and p > t
  auto eq = sys_zeta(2000, 1000, 1000, 5);
  CHECK(dev(partition_ae_dense(eq, P), eq) < 1e-2);
  auto gt = sys_zeta(3000, 1000, 2000, 2);
  CHECK(dev(partition_ae_dense(gt, P), gt) < 1e-2);
  // internal t+ is the large-(a, b) saddle with eps = p / t
  BigComplex z(2);
  auto s = ab::saddle_points_ab(Real(1000, 256) / Real(2000, 256), z);
  CHECK(rel(dense_t_plus(1000, 2000, z), s.t_plus) < 1e-70);
  CHECK(code_of([] { partition_ae_dense(sys_zeta(3000, 2000, 1000, 1), P); }) == ErrorCode::ExcludedZ);
  auto loose = partition_ae_dense(sys_zeta(3000, 1000, 500, 2), P);
  REQUIRE(loose.warning);
  CHECK(loose.warning->code == ErrorCode::RegimeGuard);
}

TEST_CASE("holes complement") {
  auto c = holes_complement(sys(10, 8, 7));
  CHECK(c.system.N == 10);
  CHECK(c.system.t == 2);
  CHECK(c.system.p == 3);
  CHECK(c.zeta_not_rescaled);
  for (unsigned long N = 1; N <= 12; ++N)
    for (unsigned long t = 0; t <= N; ++t)
      for (unsigned long p = 0; p <= N; ++p) {
        auto s = sys(N, t, p, mpq_class(1, 3), mpq_class(2, 3));
        auto back = holes_complement(holes_complement(s).system).system;
        CHECK(back.t == t);
        CHECK(back.p == p);
        CHECK(back.P_on == s.P_on);
        CHECK(back.P_off == s.P_off);
        auto h = holes_complement(s).system;
        CHECK((h.p + h.t <= N) == (p + t >= N));
      }
}

TEST_CASE("Kerr emission probability") {
  KerrChannel ch{Real(1, 256), Real(0.5, 256), Real(0.3, 256), Real(0.2, 256)};
  Real A = expm1(ch.x);
  for (unsigned long m : {0ul, 1ul, 5ul}) {
    Real expect = A * pow(ch.gamma_abs, static_cast<long>(m)) / pow(A + ch.gamma_abs, static_cast<long>(m + 1));
    CHECK(rel(kerr_emission_prob(ch, m, 0, P), BigComplex(expect)) < 1e-70);
  }
  KerrChannel black{Real(2, 256), Real(0, 256), Real(0.3, 256), Real(0.2, 256)};
  CHECK(rel(kerr_emission_prob(black, 0, 0, P), BigComplex(1)) < 1e-70);
  CHECK(kerr_emission_prob(black, 3, 0, P).is_zero());
  CHECK(code_of([&] {
          KerrChannel bad = ch;
          bad.gamma_abs = Real(1.5, 256);
          kerr_emission_prob(bad, 1, 1, P);
        }) == ErrorCode::DomainViolation);
}

TEST_CASE("Kerr normalization for a consistent channel") {
  // (e^b - 1)(e^mu - 1) = A^2 (1 - G) / (G^2 e^x)
  Real x(1, 256), G(0.5, 256);
  Real A = expm1(x);
  Real w = A * A * (1 - G) / (G * G * exp(x));
  KerrChannel ch{x, G, log1p(A), log1p(w / A)};
  for (unsigned long n : {0ul, 2ul, 5ul}) {
    Real prev(0, 256);
    for (unsigned long M : {10ul, 40ul, 160ul}) {
      Real s = kerr_mass(ch, n, M);
      CHECK(s > prev);
      CHECK(s <= Real(1) + Real(1e-60));
      prev = s;
    }
    CHECK(abs(prev - 1) < Real(1e-20));
  }
}

TEST_CASE("Kerr large counts use the saddle form") {
  KerrChannel ch{Real(1, 256), Real(0.5, 256), Real(0.3, 256), Real(0.2, 256)};
  KerrConfig asym;
  asym.asymptotic_from = 1;
  double prev = 1;
  for (unsigned long m : {500ul, 2000ul}) {
    double d = rel(kerr_emission_prob(ch, m, m, P, asym), kerr_emission_prob(ch, m, m, P));
    CHECK(d < 1e-3);
    CHECK(d < prev);
    prev = d;
  }
}
