#pragma once

#include "hgfae/complex.hpp"
#include "hgfae/precision.hpp"

namespace hgfae {

// Principal branch of ln Gamma(z): the continuation from the positive real
// axis with the cut along the negative real axis. Throws
// PoleAtNonPositiveInteger at z = 0, -1, -2, ...
BigComplex log_gamma(const BigComplex& z, const Precision& prec = default_precision());

BigComplex gamma(const BigComplex& z, const Precision& prec = default_precision());

// 1/Gamma(z); exactly zero at the non-positive integers.
BigComplex reciprocal_gamma(const BigComplex& z, const Precision& prec = default_precision());

// Rising factorial (x)_n as a finite product.
BigComplex pochhammer(const BigComplex& x, unsigned long n);

// Leading Stirling approximation (z - 1/2) ln z - z + ln(2 pi) / 2.
// Requires Re z > 0 and |z| >= threshold (BelowThreshold otherwise).
BigComplex stirling_lgamma(const BigComplex& z, const Real& threshold = Real(10),
                           const Precision& prec = default_precision());

}  // namespace hgfae
