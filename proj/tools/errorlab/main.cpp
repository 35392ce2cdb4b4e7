#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hgfae/hgf.hpp"
#include "hgfae/lattice_gas.hpp"
#include "hgfae/msd.hpp"
#include "lab.hpp"

using namespace errorlab;

namespace {

constexpr int kOk = 0, kUsage = 1, kNumeric = 2, kConfig = 3;

struct Globals {
  long bits = 256;
  std::string format = "csv";
  std::string out;
  std::optional<double> tolerance;
  bool strict = false;
  unsigned jobs = 1;
};

long default_bits() {
  if (const char* env = std::getenv("HGFAE_PRECISION_BITS")) {
    try {
      return std::stol(env);
    } catch (...) {
    }
  }
  return 256;
}

// Output goes to --out when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::string> base_header(const Globals& g, const std::string& command) {
  return {"errorlab 0.1.0", "command=" + command, "precision_bits=" + std::to_string(g.bits)};
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> split_char(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}


const std::vector<std::string> kSweepKeys = {
    "a0",     "b0",     "c0",      "eps1",   "eps2",       "eps3",   "lam",       "lam_scales",     "z_start",
    "z_stop", "z_count", "z_imag", "z_list", "methods",    "oracle", "precision_bits", "format", "tolerance", "out"};

SweepSpec build_spec(const std::map<std::string, std::string>& kv, const Precision& prec) {
  auto get = [&](const std::string& k, const std::string& def) {
    auto it = kv.find(k);
    return it == kv.end() ? def : it->second;
  };
  long bits = prec.bits;
  SweepSpec s;
  s.label = "sweep";
  s.prec = prec;
  s.c.a0 = parse_complex(get("a0", "0"), bits);
  s.c.b0 = parse_complex(get("b0", "0"), bits);
  s.c.c0 = parse_complex(get("c0", "0"), bits);
  s.c.eps1 = parse_real(get("eps1", "0"), bits);
  s.c.eps2 = parse_real(get("eps2", "0"), bits);
  s.c.eps3 = parse_real(get("eps3", "1"), bits);
  s.c.lam = parse_complex(get("lam", "100"), bits);
  if (kv.count("lam_scales")) {
    std::vector<double> scales;
    for (auto& w : split_ws(kv.at("lam_scales"))) scales.push_back(std::stod(w));
    s.lambda_grid = ray_grid(s.c.lam, scales);
  } else {
    s.lambda_grid = {s.c.lam};
  }
  if (kv.count("z_list")) {
    for (auto& w : split_char(kv.at("z_list"), ';')) s.z_grid.push_back(parse_complex(split_ws(w).at(0), bits));
  } else {
    s.z_grid = axis_grid(parse_real(get("z_start", "0"), bits), parse_real(get("z_stop", "1"), bits),
                         std::stol(get("z_count", "11")), parse_real(get("z_imag", "0"), bits));
  }
  for (auto& w : split_ws(get("methods", "ac_leading"))) {
    auto m = parse_method(w);
    if (!m) throw ConfigError("unknown method '" + w + "'");
    s.methods.push_back(*m);
  }
  auto o = parse_oracle(get("oracle", "series"));
  if (!o) throw ConfigError("unknown oracle '" + get("oracle", "") + "'");
  s.oracle = *o;
  return s;
}

int emit_sweeps(const Globals& g, const std::vector<std::string>& header, const std::vector<SweepSpec>& specs) {
  std::vector<std::vector<Row>> tables;
  bool hard = false;
  for (const auto& s : specs) {
    tables.push_back(run_sweep(s, g.jobs));
    for (const auto& r : tables.back()) hard = hard || r.hard_error;
  }
  Sink sink(g.out);
  OutputOptions opt;
  opt.json = g.format == "json";
  opt.tolerance = g.tolerance;
  write_sweep(sink.os(), header, specs, tables, opt);
  return g.strict && hard ? kNumeric : kOk;
}

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

int run_selftest(const Globals& g) {
  Precision prec = Precision::with_bits(g.bits);
  std::vector<Check> checks;
  auto run = [&](const std::string& name, auto&& fn) {
    try {
      auto [ok, detail] = fn();
      checks.push_back({name, ok, detail});
    } catch (const std::exception& e) {
      checks.push_back({name, false, e.what()});
    }
  };
  run("relative_error", [&]() -> std::pair<bool, std::string> {
    Real r = relative_error(BigComplex(Real(101, g.bits) / 100), BigComplex(Real(1, g.bits)));
    return {abs(r - 1.0) < 1e-60, r.to_string(20)};
  });
  run("hgf_log", [&]() -> std::pair<bool, std::string> {
    auto in = hgfae::hgf::make_input(BigComplex(1), BigComplex(1), BigComplex(2), BigComplex(Real(1, g.bits) / 2));
    BigComplex v = hgfae::hgf::hgf_eval(in, prec).value;
    Real want = 2.0 * log(Real(2, g.bits));
    return {abs(v - BigComplex(want)) < hgfae::epsilon(g.bits) * 1e6, v.to_string(20)};
  });
  run("partition_75", [&]() -> std::pair<bool, std::string> {
    hgfae::lattice::LatticeGasSystem s{10, 3, 2, mpq_class(1, 2), mpq_class(1, 2)};
    mpq_class b = hgfae::lattice::partition_bruteforce(s);
    BigComplex c = hgfae::lattice::partition_closed(s, prec);
    return {b == 75 && abs(c - 75.0) < 1e-50, b.get_str()};
  });
  run("gaussian_saddle", [&]() -> std::pair<bool, std::string> {
    namespace msd = hgfae::msd;
    auto pf = msd::make_phase(msd::PhaseKind::Gaussian, Real(1, g.bits));
    BigComplex lam(Real(10, g.bits));
    auto sd = msd::make_saddle(pf, BigComplex(Real(0, g.bits)), lam);
    BigComplex v = msd::saddle_approx(pf, msd::Integrand{}, sd, lam);
    Real want = sqrt(Real::pi(g.bits) / 10);
    return {abs(v - BigComplex(want)) < hgfae::epsilon(g.bits) * 1e6, v.to_string(20)};
  });
  run("fig5a_full", [&]() -> std::pair<bool, std::string> {
    auto specs = preset("fig5a", prec);
    AsymCase c = specs.front().c;
    BigComplex z(Real(95, g.bits) / 100);
    std::optional<hgfae::Warning> w;
    Real r = relative_error(ae_value(AeMethod::AcFull, c, z, w), oracle_value(Oracle::Series, c, z, prec));
    return {r < 2.0, r.to_string(6) + "%"};
  });
  Sink sink(g.out);
  bool all = true;
  for (const auto& c : checks) {
    sink.os() << (c.ok ? "pass " : "FAIL ") << c.name << " " << c.detail << "\n";
    all = all && c.ok;
  }
  return all ? kOk : kNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"errorlab: hypergeometric expansions against reference values"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.bits = default_bits();
  app.add_option("--precision-bits", g.bits, "working precision in bits (env HGFAE_PRECISION_BITS)")
      ->check(CLI::Range(64L, 1L << 20));
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--tolerance", g.tolerance, "relative tolerance; rows above it are flagged");
  app.add_flag("--strict", g.strict, "exit 2 when any row has a hard error");
  app.add_option("--jobs", g.jobs, "worker threads for sweeps")->check(CLI::Range(1u, 256u));

  auto* eval = app.add_subcommand("eval", "evaluate one 2F1");
  std::string ea = "1", eb = "1", ec = "2", ez = "0.5", side = "below";
  eval->add_option("--a", ea);
  eval->add_option("--b", eb);
  eval->add_option("--c", ec);
  eval->add_option("--z", ez);
  eval->add_option("--cut-side", side, "side of the cut for real z > 1")->check(CLI::IsMember({"below", "above"}));

  auto* ae = app.add_subcommand("ae", "one expansion against its reference");
  std::map<std::string, std::string> ae_kv{{"z_count", "1"}};
  std::string ae_z = "0.5";
  for (const char* k : {"a0", "b0", "c0", "eps1", "eps2", "eps3", "lam", "methods", "oracle"})
    ae->add_option(std::string("--") + k, ae_kv[k]);
  ae->add_option("--z", ae_z);

  auto* sweep = app.add_subcommand("sweep", "expansion vs reference over a grid");
  std::string config_path;
  std::map<std::string, std::string> sweep_flags;
  sweep->add_option("--config", config_path, "flat key = value file");
  for (const auto& k : kSweepKeys) {
    if (k == "precision_bits" || k == "format" || k == "tolerance" || k == "out") continue;
    std::string flag = k;
    std::replace(flag.begin(), flag.end(), '_', '-');
    sweep->add_option("--" + flag, sweep_flags[k]);
  }

  auto* part = app.add_subcommand("partition", "lattice gas partition function in every regime");
  unsigned long pN = 10, pt = 3, pp = 2;
  std::string p_on = "1/2", p_off = "1/2";
  bool no_brute = false;
  part->add_option("--N", pN);
  part->add_option("--t", pt);
  part->add_option("--p", pp);
  part->add_option("--p-on", p_on);
  part->add_option("--p-off", p_off);
  part->add_flag("--no-brute", no_brute, "skip the exact double sum");

  auto* fig = app.add_subcommand("figure", "figure data presets");
  std::string preset_id;
  fig->add_option("--preset", preset_id)->required()->check(CLI::IsMember(preset_ids()));

  auto* self = app.add_subcommand("selftest", "quick internal checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) {
      auto in = hgfae::hgf::make_input(parse_complex(ea, g.bits), parse_complex(eb, g.bits), parse_complex(ec, g.bits),
                                       parse_complex(ez, g.bits));
      in.cut_side = side == "below" ? hgfae::hgf::CutSide::Below : hgfae::hgf::CutSide::Above;
      auto r = hgfae::hgf::hgf_eval(in, Precision::with_bits(g.bits));
      Sink sink(g.out);
      auto& os = sink.os();
      if (g.format == "json") {
        os << "{\"hgf_re\": \"" << format_real(r.value.re()) << "\", \"hgf_im\": \"" << format_real(r.value.im())
           << "\", \"method\": \"" << hgfae::hgf::to_string(r.method) << "\", \"est_rel_error\": \""
           << r.est_rel_error.to_string(6) << "\"}\n";
      } else {
        for (const auto& h : base_header(g, "eval")) os << "# " << h << "\n";
        os << "# a=" << ea << " b=" << eb << " c=" << ec << " z=" << ez << " cut_side=" << side << "\n";
        os << "hgf_re,hgf_im,method,est_rel_error\n"
           << format_real(r.value.re()) << "," << format_real(r.value.im()) << "," << hgfae::hgf::to_string(r.method)
           << "," << r.est_rel_error.to_string(6) << "\n";
      }
      return kOk;
    }
    if (ae->parsed()) {
      std::map<std::string, std::string> kv;
      for (auto& [k, v] : ae_kv)
        if (!v.empty()) kv[k] = v;
      kv["z_list"] = ae_z;
      Globals gg = g;
      gg.strict = true;
      auto spec = build_spec(kv, Precision::with_bits(g.bits));
      spec.label = "ae";
      auto header = base_header(g, "ae");
      return emit_sweeps(gg, header, {spec});
    }
    if (sweep->parsed()) {
      std::map<std::string, std::string> kv;
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw ConfigError("cannot read " + config_path);
        kv = parse_config(f, kSweepKeys);
      }
      for (auto& [k, v] : sweep_flags)
        if (!v.empty()) kv[k] = v;
      // config may set globals that were not given as flags
      if (kv.count("precision_bits") && app.count("--precision-bits") == 0) g.bits = std::stol(kv["precision_bits"]);
      if (kv.count("format") && app.count("--format") == 0) g.format = kv["format"];
      if (kv.count("tolerance") && app.count("--tolerance") == 0) g.tolerance = std::stod(kv["tolerance"]);
      if (kv.count("out") && app.count("--out") == 0) g.out = kv["out"];
      if (g.format != "csv" && g.format != "json") throw ConfigError("format must be csv or json");
      auto spec = build_spec(kv, Precision::with_bits(g.bits));
      auto header = base_header(g, "sweep");
      for (auto& [k, v] : kv) header.push_back(k + "=" + v);
      return emit_sweeps(g, header, {spec});
    }
    if (part->parsed()) {
      hgfae::lattice::LatticeGasSystem s{pN, pt, pp, parse_rational(p_on), parse_rational(p_off)};
      PartitionModes modes;
      modes.brute = !no_brute && std::min(pp, pt) <= hgfae::lattice::kBruteForceGuard;
      auto t = run_partition(s, modes, Precision::with_bits(g.bits));
      Sink sink(g.out);
      write_partition(sink.os(), base_header(g, "partition"), t, g.format == "json");
      bool hard = false;
      for (const auto& r : t.rows) hard = hard || r.status.rfind("error:", 0) == 0;
      return g.strict && hard ? kNumeric : kOk;
    }
    if (fig->parsed()) {
      auto header = base_header(g, "figure");
      header.push_back("preset=" + preset_id);
      return emit_sweeps(g, header, preset(preset_id, Precision::with_bits(g.bits)));
    }
    if (self->parsed()) return run_selftest(g);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad value: " << e.what() << "\n";
    return kUsage;
  } catch (const hgfae::Error& e) {
    std::cerr << hgfae::to_string(e.code()) << ": " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kUsage;
}
