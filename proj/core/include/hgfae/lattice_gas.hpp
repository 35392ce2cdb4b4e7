#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "hgfae/complex.hpp"
#include "hgfae/error.hpp"
#include "hgfae/precision.hpp"

namespace hgfae::lattice {

// N nodes, t traps, p particles; binding energy is fixed by P_on / P_off.
struct LatticeGasSystem {
  unsigned long N = 0, t = 0, p = 0;
  mpq_class P_on{1, 2}, P_off{1, 2};
};

// Throws DomainViolation on t > N, p > N or probabilities out of range.
void validate_system(const LatticeGasSystem& s);

// 1 - delta(1, P_on) + P_on / P_off, exact.
mpq_class zeta_variable(const LatticeGasSystem& s);

// Exact binomial.
mpz_class binomial(unsigned long n, unsigned long k);

inline constexpr unsigned long kBruteForceGuard = 5000;

// Double sum over trapped (n) and bound (k) particles in exact rationals.
mpq_class partition_bruteforce(const LatticeGasSystem& s);
// Same sum with the Boltzmann factor r = P_on / P_off given directly (any
// rational, so zeta = 1 + r may drop below 1); all_bind replaces the inner
// sum by r^n.
mpq_class partition_bruteforce(unsigned long N, unsigned long t, unsigned long p, const mpq_class& r,
                               bool all_bind = false);

// C(N-t, p) * F(-p, -t; N-p-t+1; zeta) through hgf_eval.
BigComplex partition_closed(const LatticeGasSystem& s, const Precision& prec = default_precision());

// Same closed form with the terminating series summed in rationals.
mpq_class partition_closed_rational(const LatticeGasSystem& s);
mpq_class partition_closed_rational(unsigned long N, unsigned long t, unsigned long p, const mpq_class& zeta);

struct PartitionAe {
  BigComplex value;
  std::string form;  // which expression was used
  std::optional<Warning> warning;
};

struct RegimeGuards {
  // dilute: p t <= N * dilute_ratio
  double dilute_ratio = 0.01;
  // trapping: the small one of p, t at most this
  unsigned long trapping_small = 100;
  // dense: N - p - t at most this
  unsigned long dense_gap = 1;
};

// C(N-t, p) (1 + p t z / (N-p-t+1)); simplified uses 1 + p t z / N.
PartitionAe partition_ae_dilute(const LatticeGasSystem& s, const Precision& prec = default_precision(),
                                const RegimeGuards& g = {}, bool simplified = false);

// C(N-t, p) (1 + t z / (N-p-t))^p, or with p and t swapped when p > t.
PartitionAe partition_ae_trapping(const LatticeGasSystem& s, const Precision& prec = default_precision(),
                                  const RegimeGuards& g = {});

// Dominant-saddle form for p + t close to N. With c = N-p-t+1 and
// s = sqrt((t-p)^2 + 4pt/z), t+ = ((t-p) + s) / (2t):
// C Gamma(c) p^(1/2-c) (2 pi s/t)^(-1/2) t+^(c+p) (t+ - 1)^(-p)
//   (1 - z t+)^(-c-t) (1 - z)^(c+p+t).
// For c = 1 this is the familiar sqrt((1+sigma) t+ / (4 pi p sigma)) form.
PartitionAe partition_ae_dense(const LatticeGasSystem& s, const Precision& prec = default_precision(),
                               const RegimeGuards& g = {});

// t+ used by partition_ae_dense, as a double-free exact-ish value.
BigComplex dense_t_plus(unsigned long p, unsigned long t, const BigComplex& z);

struct Complemented {
  LatticeGasSystem system;
  // the variable for the hole picture is not rescaled; values computed from
  // it are for the passed-through probabilities only
  bool zeta_not_rescaled = true;
};

// (N, t, p) -> (N, N-t, N-p); probabilities are passed through.
Complemented holes_complement(const LatticeGasSystem& s);

struct KerrChannel {
  Real x;          // transition parameter, > 0
  Real gamma_abs;  // absorptivity in [0, 1]
  Real beta, mu;   // jump log-probabilities
};

struct KerrConfig {
  // min(m, n) at or above which the dense saddle form replaces the series
  unsigned long asymptotic_from = 100000;
};

// (e^x-1) e^(nx) G^(m+n) / (e^x-1+G)^(m+n+1) * F(-m, -n; 1; (e^b-1)(e^mu-1))
BigComplex kerr_emission_prob(const KerrChannel& ch, unsigned long m, unsigned long n,
                              const Precision& prec = default_precision(), const KerrConfig& cfg = {});

}  // namespace hgfae::lattice
