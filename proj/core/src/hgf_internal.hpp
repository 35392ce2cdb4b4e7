#pragma once

#include <optional>
#include <vector>

#include "hgfae/complex.hpp"

namespace hgfae::hgf::detail {

// Side of the cut [1, inf) used for logarithms of 1 - z and -z.
struct Cut {
  bool on_cut = false;
  int sign = 1;  // +1: arg = +pi
};

bool on_cut(const BigComplex& z);
BigComplex log_one_minus(const BigComplex& z, const Cut& cut);
BigComplex log_minus(const BigComplex& z, const Cut& cut);

std::optional<long> nonpositive_integer(const BigComplex& x);

// log2(big / result) clamped at 0.
double loss_bits(const Real& big, const Real& result);

struct SeriesSum {
  BigComplex value;
  Real max_term;
  long terms = 0;
  bool terminating = false;
  bool converged = false;
};

SeriesSum sum_series(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& z,
                     const Real& tol, long max_terms);

// prod Gamma(num) / prod Gamma(den); zero when a denominator sits on a pole.
BigComplex gamma_ratio(const std::vector<BigComplex>& num, const std::vector<BigComplex>& den, long bits);

}  // namespace hgfae::hgf::detail
