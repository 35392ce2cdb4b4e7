#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgfae/complex.hpp"
#include "hgfae/error.hpp"
#include "hgfae/hgf.hpp"

namespace hgfae {

// F(a0 + eps1 lam, b0 + eps2 lam; c0 + eps3 lam; z)
struct AsymCase {
  BigComplex a0, b0, c0;
  Real eps1, eps2, eps3;
  BigComplex lam;
};

// Throws ParameterDomain unless Re lam > 0 and at least one eps is zero
// (all three zero is rejected).
void validate_case(const AsymCase& c);

hgf::HgfInput case_input(const AsymCase& c, const BigComplex& z);

// Reference value of the case through hgf_eval.
BigComplex case_hgf(const AsymCase& c, const BigComplex& z, const Precision& prec = default_precision());

enum class Regime { LargeCOnly, AcLeading, AcFull, AbComplex, AbDominant, AbNegative };

const char* to_string(Regime r);

struct AeResult {
  BigComplex value;
  std::vector<std::pair<std::string, BigComplex>> terms;
  Regime regime = Regime::AcLeading;
  std::optional<Warning> warning;
};

}  // namespace hgfae
