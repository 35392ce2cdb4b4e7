#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lab.hpp"
#include "oracles.hpp"

using namespace errorlab;
using hgfae::ErrorCode;
using oracle::rel;

namespace {

const Precision P = Precision::with_bits(256);

namespace fs = std::filesystem;

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("errorlab_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const fs::path& out) {
  std::string cmd = std::string(ERRORLAB_BIN) + " " + args + " > " + out.string() + " 2> " + out.string() + ".err";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const SweepSpec& first(const std::vector<SweepSpec>& v) { return v.front(); }

}  // namespace

TEST_CASE("relative error metric") {
  BigComplex ref(Real(3, 256), Real(-2, 256));
  CHECK(relative_error(ref, ref).is_zero());
  CHECK(rel(relative_error(ref * Real(1.01, 256), ref), Real(1, 256)) < 1e-14);
  try {
    relative_error(ref, BigComplex(0));
    FAIL("expected ReferenceZero");
  } catch (const hgfae::Error& e) {
    CHECK(e.code() == ErrorCode::ReferenceZero);
  }
}

TEST_CASE("preset fig2a setup at z = 1") {
  SweepSpec s = first(preset("fig2a", P));
  s.z_grid = {BigComplex(1)};
  auto rows = run_sweep(s);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == "ok");
  CHECK(*rows[0].rel_err_pct < Real(1));
}

TEST_CASE("critical grid point keeps the sweep going") {
  SweepSpec s = first(preset("fig2a", P));
  s.z_grid = {BigComplex(1), BigComplex(2), BigComplex(3)};
  auto rows = run_sweep(s);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].status == "ok");
  CHECK(rows[1].status == "error:NearCriticalZ");
  CHECK(rows[1].hgf.has_value());
  CHECK(!rows[1].ae.has_value());
  CHECK(rows[2].status == "ok");
}

TEST_CASE("row order is z-major, then lambda, then method") {
  SweepSpec s = first(preset("fig5a", P));
  s.z_grid = {BigComplex(0.7), BigComplex(0.9)};
  s.lambda_grid = {BigComplex(50.0, 75.0), BigComplex(100.0, 150.0)};
  auto rows = run_sweep(s, 3);
  REQUIRE(rows.size() == 8);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].z == s.z_grid[i / 4]);
    CHECK(rows[i].lam == s.lambda_grid[(i / 2) % 2]);
    CHECK(rows[i].method == s.methods[i % 2]);
  }
  auto serial = run_sweep(s, 1);
  for (size_t i = 0; i < rows.size(); ++i) CHECK(*rows[i].ae == *serial[i].ae);
}

TEST_CASE("full expansion beats the limited one between 1/eps and 1") {
  for (const char* id : {"fig5a", "fig5c"}) {
    SweepSpec s = first(preset(id, P));
    s.z_grid = {BigComplex(0.85), BigComplex(0.95)};
    auto rows = run_sweep(s);
    for (size_t i = 0; i < rows.size(); i += 2) {
      REQUIRE(rows[i].method == AeMethod::AcFull);
      REQUIRE(rows[i + 1].method == AeMethod::AcLimited);
      CHECK(*rows[i].rel_err_pct * 5 < *rows[i + 1].rel_err_pct);
    }
  }
}

TEST_CASE("every preset builds valid specs") {
  for (const auto& id : preset_ids()) {
    auto specs = preset(id, P);
    CHECK(!specs.empty());
    for (const auto& s : specs) CHECK_NOTHROW(validate_spec(s));
  }
  CHECK(preset_ids().size() == 9);
}

TEST_CASE("sd oracle agrees with the series") {
  SweepSpec s = first(preset("fig2a", P));
  AsymCase c = s.c;
  c.lam = BigComplex(40);
  BigComplex z(0.3);
  CHECK(rel(oracle_value(Oracle::SdIntegrate, c, z, P), oracle_value(Oracle::Series, c, z, P)) < 1e-25);
  CHECK(rel(oracle_value(Oracle::Quadrature, c, z, P), oracle_value(Oracle::Series, c, z, P)) < 1e-25);
}

TEST_CASE("partition table") {
  auto t = run_partition(hgfae::lattice::LatticeGasSystem{10, 3, 2, {1, 2}, {1, 2}}, PartitionModes{}, P);
  CHECK(!t.complemented);
  REQUIRE(t.rows.size() >= 2);
  CHECK(t.rows[0].form == "bruteforce");
  CHECK(t.rows[0].status == "ok;exact_match");
  CHECK(*t.rows[0].value == Real(75, 256));
  CHECK(t.rows[1].form == "closed");
  CHECK(rel(*t.rows[1].value, Real(75, 256)) < 1e-70);

  auto c = run_partition(hgfae::lattice::LatticeGasSystem{10, 8, 7, {1, 2}, {1, 2}}, PartitionModes{}, P);
  CHECK(c.complemented);
  CHECK(c.system.t == 2);
  CHECK(c.system.p == 3);
  for (const auto& r : c.rows) CHECK(r.status.find("complemented") != std::string::npos);
  std::ostringstream os;
  write_partition(os, {}, c, false);
  CHECK(os.str().find("# complement=applied") != std::string::npos);

  PartitionModes dense_only{false, false, false, true};
  auto d = run_partition(hgfae::lattice::LatticeGasSystem{3000, 2000, 1000, {1, 2}, {1, 2}}, dense_only, P);
  REQUIRE(d.rows.size() == 2);
  CHECK(d.rows[1].form.rfind("dense", 0) == 0);
  CHECK(*d.rows[1].rel_dev_pct < Real(1));
}

TEST_CASE("config parsing") {
  std::vector<std::string> keys = {"a0", "lam", "z_list"};
  std::istringstream ok("# comment\na0 = 1/2   # trailing\n\nlam=100,50\n");
  auto kv = parse_config(ok, keys);
  CHECK(kv.at("a0") == "1/2");
  CHECK(kv.at("lam") == "100,50");
  std::istringstream unknown("a0 = 1\nbogus = 2\n");
  CHECK_THROWS_AS(parse_config(unknown, keys), ConfigError);
  std::istringstream dup("a0 = 1\na0 = 2\n");
  CHECK_THROWS_AS(parse_config(dup, keys), ConfigError);
  std::istringstream bad("a0 1\n");
  CHECK_THROWS_AS(parse_config(bad, keys), ConfigError);
}

TEST_CASE("number parsing and formatting") {
  CHECK(parse_real("2/3", 256) == Real(2, 256) / Real(3, 256));
  CHECK(parse_complex("100,50", 256) == BigComplex(100.0, 50.0));
  CHECK(parse_rational("0.25") == mpq_class(1, 4));
  CHECK(parse_rational("3/9") == mpq_class(1, 3));
  Real x = Real(1, 256) / Real(7, 256);
  CHECK(Real::from_string(format_real(x), 256) == x);
  CHECK(parse_method("ac_full") == AeMethod::AcFull);
  CHECK(!parse_method("nope"));
  CHECK(parse_oracle("sd_integrate") == Oracle::SdIntegrate);
}

TEST_CASE("command line: determinism and output") {
  auto a = scratch() / "fig7b_a.csv", b = scratch() / "fig7b_b.csv";
  REQUIRE(run("figure --preset fig7b", a) == 0);
  REQUIRE(run("--jobs 2 figure --preset fig7b", b) == 0);
  std::string sa = slurp(a), sb = slurp(b);
  CHECK(!sa.empty());
  // the header records the job count; rows must match byte for byte
  auto rows_of = [](const std::string& s) { return s.substr(s.find("z_re,z_im")); };
  CHECK(rows_of(sa) == rows_of(sb));
  auto c = scratch() / "fig7b_c.csv";
  REQUIRE(run("figure --preset fig7b", c) == 0);
  CHECK(slurp(c) == sa);
  CHECK(sa.find("z_re,z_im,lam_re,lam_im,method,hgf_re,hgf_im,ae_re,ae_im,rel_err_pct,status\n") !=
        std::string::npos);
  CHECK(sa.find("# case=") != std::string::npos);
  CHECK(sa.find("precision") != std::string::npos);
}

TEST_CASE("command line: subcommands and exit codes") {
  auto o = scratch() / "out.txt";
  CHECK(run("eval --a 1 --b 1 --c 2 --z 0.5", o) == 0);
  CHECK(slurp(o).find("hgf_re,hgf_im,method,est_rel_error") != std::string::npos);
  CHECK(run("--format json eval --a 1 --b 1 --c 2 --z 0.5", o) == 0);
  CHECK(slurp(o).find("\"hgf_re\"") != std::string::npos);
  CHECK(run("partition --N 10 --t 3 --p 2 --p-on 1/2 --p-off 1/2", o) == 0);
  CHECK(slurp(o).find("ok;exact_match") != std::string::npos);
  CHECK(run("ae --a0 1 --b0 1 --c0 2 --eps1 1/2 --eps2 0 --eps3 1 --lam 400,200 --methods ac_leading --z 1", o) == 0);
  CHECK(run("selftest", o) == 0);

  CHECK(run("", o) == 1);
  CHECK(run("figure --preset nope", o) == 1);
  CHECK(run("--precision-bits 8 selftest", o) == 1);

  auto cfg = scratch() / "bad.cfg";
  std::ofstream(cfg) << "a0 = 1\nnot_a_key = 3\n";
  CHECK(run("sweep --config " + cfg.string(), o) == 3);

  auto good = scratch() / "good.cfg";
  std::ofstream(good) << "a0 = 1\nb0 = 1\nc0 = 2\neps1 = 1/2\neps2 = 0\neps3 = 1\nlam = 400,200\n"
                         "methods = ac_leading\nz_list = 1.5;2\n";
  CHECK(run("sweep --config " + good.string(), o) == 0);
  CHECK(slurp(o).find("error:NearCriticalZ") != std::string::npos);
  CHECK(run("--strict sweep --config " + good.string(), o) == 2);
}
