#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgfae/asym.hpp"
#include "hgfae/lattice_gas.hpp"

namespace errorlab {

using hgfae::AsymCase;
using hgfae::BigComplex;
using hgfae::Precision;
using hgfae::Real;

// 100 |1 - ae / ref|; throws ReferenceZero for ref = 0.
Real relative_error(const BigComplex& ae, const BigComplex& ref);

enum class AeMethod { LargeC, AcLeading, AcLimited, AcFull, AbComplex, AbDominant, AbNegative };
enum class Oracle { Series, Quadrature, SdIntegrate };

const char* to_string(AeMethod m);
const char* to_string(Oracle o);
std::optional<AeMethod> parse_method(const std::string& s);
std::optional<Oracle> parse_oracle(const std::string& s);

// Value of one expansion; warning is set for soft conditions.
BigComplex ae_value(AeMethod m, const AsymCase& c, const BigComplex& z, std::optional<hgfae::Warning>& warning);

// Reference value of the case at z.
BigComplex oracle_value(Oracle o, const AsymCase& c, const BigComplex& z, const Precision& prec);

// F(a0 + eps lam, b0; c0 + lam; z) for 0 < eps < 1 from the traced
// steepest-descent path of eps ln t + (1-eps) ln(1-t) through t = eps,
// closed to 0 and 1, times Gamma(c) / (Gamma(a) Gamma(c-a)).
BigComplex sd_reference(const AsymCase& c, const BigComplex& z, const Precision& prec);

struct SweepSpec {
  std::string label;
  AsymCase c;
  std::vector<BigComplex> z_grid;
  std::vector<BigComplex> lambda_grid;
  std::vector<AeMethod> methods;
  Oracle oracle = Oracle::Series;
  Precision prec = hgfae::default_precision();
};

// Throws ParameterDomain for empty grids or method lists.
void validate_spec(const SweepSpec& s);

struct Row {
  BigComplex z, lam;
  AeMethod method = AeMethod::AcLeading;
  std::optional<BigComplex> hgf, ae;
  std::optional<Real> rel_err_pct;
  std::string status = "ok";
  bool hard_error = false;
};

// z-major, then lambda, then method. Per-row failures land in status.
// jobs > 1 computes (z, lambda) cells on worker threads.
std::vector<Row> run_sweep(const SweepSpec& spec, unsigned jobs = 1);

// Evenly spaced real parts with a fixed imaginary offset; count >= 1.
std::vector<BigComplex> axis_grid(const Real& start, const Real& stop, long count, const Real& imag);

// Preset lambdas s * lam / Re(lam) for each scale s.
std::vector<BigComplex> ray_grid(const BigComplex& lam, const std::vector<double>& scales);

// Presets: fig2a, fig2b, fig5a..fig5d, fig7a, fig7b, fig8.
std::vector<std::string> preset_ids();
std::vector<SweepSpec> preset(const std::string& id, const Precision& prec);

// "1.5", "2/3", "-1e-3"; complex as "re" or "re,im".
Real parse_real(const std::string& s, long bits);
BigComplex parse_complex(const std::string& s, long bits);
mpq_class parse_rational(const std::string& s);

std::string format_real(const Real& x);
std::string describe_case(const AsymCase& c);

struct OutputOptions {
  bool json = false;
  std::optional<double> tolerance;  // fraction; rows above it are marked
};

// Header lines are written after "# ".
void write_sweep(std::ostream& os, const std::vector<std::string>& header, const std::vector<SweepSpec>& specs,
                 const std::vector<std::vector<Row>>& tables, const OutputOptions& opt);

struct PartitionRow {
  std::string form;
  std::optional<Real> value;
  std::optional<Real> rel_dev_pct;  // against the closed form
  std::string status = "ok";
};

struct PartitionModes {
  bool brute = true;
  bool dilute = true, trapping = true, dense = true;
};

struct PartitionTable {
  hgfae::lattice::LatticeGasSystem system;
  bool complemented = false;
  std::vector<PartitionRow> rows;
};

PartitionTable run_partition(const hgfae::lattice::LatticeGasSystem& s, const PartitionModes& modes,
                             const Precision& prec);

void write_partition(std::ostream& os, const std::vector<std::string>& header, const PartitionTable& t, bool json);

// Flat "key = value" text; '#' starts a comment. Throws ConfigError on
// malformed lines, duplicate keys or keys outside `allowed`.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
std::map<std::string, std::string> parse_config(std::istream& is, const std::vector<std::string>& allowed);

}  // namespace errorlab
