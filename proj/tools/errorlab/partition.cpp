#include "lab.hpp"

namespace errorlab {

namespace lg = hgfae::lattice;

namespace {

std::string error_status(const std::exception& e) {
  if (auto* he = dynamic_cast<const hgfae::Error*>(&e)) return std::string("error:") + hgfae::to_string(he->code());
  return "error:exception";
}

Real to_real(const mpq_class& q, long bits) {
  Real r(0, bits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace

PartitionTable run_partition(const lg::LatticeGasSystem& in, const PartitionModes& modes, const Precision& prec) {
  PartitionTable t;
  t.system = in;
  lg::validate_system(in);
  if (in.p + in.t > in.N) {
    t.system = lg::holes_complement(in).system;
    t.complemented = true;
  }
  const auto& s = t.system;
  std::string flag = t.complemented ? ";complemented" : "";

  PartitionRow closed;
  closed.form = "closed";
  std::optional<Real> ref;
  try {
    ref = lg::partition_closed(s, prec).re();
    closed.value = ref;
  } catch (const std::exception& e) {
    closed.status = error_status(e);
  }
  closed.status += flag;

  auto versus = [&](PartitionRow& r) {
    if (r.value && ref && !ref->is_zero()) r.rel_dev_pct = abs(*r.value / *ref - 1.0) * 100.0;
  };

  if (modes.brute) {
    PartitionRow r;
    r.form = "bruteforce";
    try {
      mpq_class exact = lg::partition_bruteforce(s);
      r.value = to_real(exact, prec.bits);
      if (exact == lg::partition_closed_rational(s)) r.status = "ok;exact_match";
      versus(r);
    } catch (const std::exception& e) {
      r.status = error_status(e);
    }
    r.status += flag;
    t.rows.push_back(r);
  }
  t.rows.push_back(closed);

  auto ae_row = [&](const std::string& name, auto&& fn) {
    PartitionRow r;
    r.form = name;
    try {
      lg::PartitionAe ae = fn();
      r.form = name + ": " + ae.form;
      r.value = ae.value.re();
      if (ae.warning) r.status = hgfae::to_string(ae.warning->code);
      versus(r);
    } catch (const std::exception& e) {
      r.status = error_status(e);
    }
    r.status += flag;
    t.rows.push_back(r);
  };
  if (modes.dilute) ae_row("dilute", [&] { return lg::partition_ae_dilute(s, prec); });
  if (modes.trapping) ae_row("trapping", [&] { return lg::partition_ae_trapping(s, prec); });
  if (modes.dense) ae_row("dense", [&] { return lg::partition_ae_dense(s, prec); });
  return t;
}

}  // namespace errorlab
