#include "hgfae/precision.hpp"

#include "hgfae/error.hpp"

namespace hgfae {

Precision Precision::with_bits(long bits) {
  Precision p;
  p.bits = bits;
  p.series_tail_tolerance = epsilon(bits < 2 ? 2 : bits);
  p.quadrature_tolerance = ldexp(Real(1, bits < 2 ? 2 : bits), -(bits / 3));
  p.validate();
  return p;
}

Precision Precision::with_tolerances(long bits, const Real& series_tol, const Real& quad_tol) {
  Precision p;
  p.bits = bits;
  p.series_tail_tolerance = series_tol.with_bits(bits < 2 ? 2 : bits);
  p.quadrature_tolerance = quad_tol.with_bits(bits < 2 ? 2 : bits);
  p.validate();
  return p;
}

void Precision::validate() const {
  if (bits < kMinBits) fail(ErrorCode::InvalidPrecision, "precision must be at least 64 bits");
  if (series_tail_tolerance <= 0 || quadrature_tolerance <= 0)
    fail(ErrorCode::InvalidPrecision, "tolerances must be positive");
  if (!series_tail_tolerance.is_finite() || !quadrature_tolerance.is_finite())
    fail(ErrorCode::InvalidPrecision, "tolerances must be finite");
  // below 2^-(bits+8) the tolerance is not meaningfully representable
  if (series_tail_tolerance.exponent() < -bits - 8 || quadrature_tolerance.exponent() < -bits - 8)
    fail(ErrorCode::InvalidPrecision, "tolerance finer than the working precision");
}

}  // namespace hgfae
