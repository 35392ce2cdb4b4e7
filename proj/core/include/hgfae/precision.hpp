#pragma once

#include "hgfae/real.hpp"

namespace hgfae {

struct Precision {
  long bits = kDefaultBits;
  Real series_tail_tolerance;
  Real quadrature_tolerance;

  // Tolerances default to 2^-bits for series and 2^-(bits/3) for quadrature.
  static Precision with_bits(long bits);
  static Precision with_tolerances(long bits, const Real& series_tol, const Real& quad_tol);

  // Throws InvalidPrecision when the record is inconsistent.
  void validate() const;
  Precision doubled() const { return with_bits(bits * 2); }
};

inline Precision default_precision() { return Precision::with_bits(kDefaultBits); }

// Evaluates f at prec and at doubled precision until two successive values
// agree to the requested relative tolerance or max_bits is reached. Returns
// the last value; accepts any callable Precision -> T where
// rel_diff(T, T) is defined.
template <typename F>
auto escalate(F&& f, const Precision& prec, const Real& rel_tol, long max_bits = 4096) {
  Precision p = prec;
  auto prev = f(p);
  while (p.bits * 2 <= max_bits) {
    p = p.doubled();
    auto next = f(p);
    bool done = rel_diff(next, prev) <= rel_tol;
    prev = std::move(next);
    if (done) break;
  }
  return prev;
}

}  // namespace hgfae
