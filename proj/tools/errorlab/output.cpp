#include <ostream>

#include "json.hpp"
#include "lab.hpp"

namespace errorlab {

namespace {

std::string opt_re(const std::optional<BigComplex>& z) { return z ? format_real(z->re()) : ""; }
std::string opt_im(const std::optional<BigComplex>& z) { return z ? format_real(z->im()) : ""; }

std::string row_status(const Row& r, const OutputOptions& opt) {
  std::string s = r.status;
  if (opt.tolerance && r.rel_err_pct && r.rel_err_pct->to_double() > *opt.tolerance * 100.0)
    s = s == "ok" ? "above_tolerance" : s + ";above_tolerance";
  return s;
}

}  // namespace

void write_sweep(std::ostream& os, const std::vector<std::string>& header, const std::vector<SweepSpec>& specs,
                 const std::vector<std::vector<Row>>& tables, const OutputOptions& opt) {
  if (opt.json) {
    nlohmann::ordered_json j;
    j["header"] = header;
    auto& cases = j["cases"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < specs.size(); ++i) {
      nlohmann::ordered_json c;
      c["label"] = specs[i].label;
      c["case"] = describe_case(specs[i].c);
      c["oracle"] = to_string(specs[i].oracle);
      auto& rows = c["rows"] = nlohmann::ordered_json::array();
      for (const Row& r : tables[i]) {
        nlohmann::ordered_json o;
        o["z_re"] = format_real(r.z.re());
        o["z_im"] = format_real(r.z.im());
        o["lam_re"] = format_real(r.lam.re());
        o["lam_im"] = format_real(r.lam.im());
        o["method"] = to_string(r.method);
        o["hgf_re"] = opt_re(r.hgf);
        o["hgf_im"] = opt_im(r.hgf);
        o["ae_re"] = opt_re(r.ae);
        o["ae_im"] = opt_im(r.ae);
        o["rel_err_pct"] = r.rel_err_pct ? format_real(*r.rel_err_pct) : "";
        o["status"] = row_status(r, opt);
        rows.push_back(std::move(o));
      }
      cases.push_back(std::move(c));
    }
    os << j.dump(2) << "\n";
    return;
  }
  for (const auto& h : header) os << "# " << h << "\n";
  os << "z_re,z_im,lam_re,lam_im,method,hgf_re,hgf_im,ae_re,ae_im,rel_err_pct,status\n";
  for (size_t i = 0; i < specs.size(); ++i) {
    os << "# case=" << specs[i].label << " " << describe_case(specs[i].c) << " oracle=" << to_string(specs[i].oracle)
       << "\n";
    for (const Row& r : tables[i]) {
      os << format_real(r.z.re()) << "," << format_real(r.z.im()) << "," << format_real(r.lam.re()) << ","
         << format_real(r.lam.im()) << "," << to_string(r.method) << "," << opt_re(r.hgf) << "," << opt_im(r.hgf)
         << "," << opt_re(r.ae) << "," << opt_im(r.ae) << "," << (r.rel_err_pct ? format_real(*r.rel_err_pct) : "")
         << "," << row_status(r, opt) << "\n";
    }
  }
}

void write_partition(std::ostream& os, const std::vector<std::string>& header, const PartitionTable& t, bool json) {
  const auto& s = t.system;
  if (json) {
    nlohmann::ordered_json j;
    j["header"] = header;
    j["N"] = s.N;
    j["t"] = s.t;
    j["p"] = s.p;
    j["P_on"] = s.P_on.get_str();
    j["P_off"] = s.P_off.get_str();
    j["complemented"] = t.complemented;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json o;
      o["form"] = r.form;
      o["value"] = r.value ? format_real(*r.value) : "";
      o["rel_dev_pct"] = r.rel_dev_pct ? format_real(*r.rel_dev_pct) : "";
      o["status"] = r.status;
      rows.push_back(std::move(o));
    }
    os << j.dump(2) << "\n";
    return;
  }
  for (const auto& h : header) os << "# " << h << "\n";
  os << "# system N=" << s.N << " t=" << s.t << " p=" << s.p << " P_on=" << s.P_on.get_str()
     << " P_off=" << s.P_off.get_str() << "\n";
  if (t.complemented) os << "# complement=applied (holes picture; zeta not rescaled)\n";
  os << "form,value,rel_dev_pct,status\n";
  for (const auto& r : t.rows)
    os << r.form << "," << (r.value ? format_real(*r.value) : "") << ","
       << (r.rel_dev_pct ? format_real(*r.rel_dev_pct) : "") << "," << r.status << "\n";
}

}  // namespace errorlab
