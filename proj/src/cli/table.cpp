#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "bte/cli.hpp"
#include "json.hpp"

namespace bte {

namespace {

constexpr const char* kHeader = "d,n,re_k,im_k,residual,multiplicity";

// Shortest decimal that reads back to the same double.
std::string fmt(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double parse_double(const std::string& s, int line) {
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw ConfigError("table line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

int parse_int(const std::string& s, int line) {
  int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw ConfigError("table line " + std::to_string(line) + ": bad integer '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TableManifest manifest_of(const ScanReport& rep, const RunConfig& cfg) {
  TableManifest m;
  m.d = rep.d;
  m.box = rep.box;
  m.n_max_used = rep.n_max_used;
  m.strip_margin = rep.strip_margin;
  m.strip_vacuous = rep.strip_vacuous;
  m.newton_tol = cfg.newton_tol;
  m.quad = cfg.quad;
  m.failures = static_cast<int>(rep.failures.size());
  return m;
}

void write_table(std::ostream& os, const ScanReport& rep, const RunConfig& cfg) {
  TableManifest m = manifest_of(rep, cfg);
  os << "# bte eigenvalue table\n";
  os << "# version=" << kToolVersion << "\n";
  os << "# d=" << m.d << "\n";
  os << "# box=" << fmt(m.box.re_min) << ":" << fmt(m.box.re_max) << ":" << fmt(m.box.im_min) << ":"
     << fmt(m.box.im_max) << "\n";
  os << "# n_max_used=" << m.n_max_used << "\n";
  os << "# strip_margin=" << fmt(m.strip_margin) << "\n";
  os << "# strip_vacuous=" << (m.strip_vacuous ? 1 : 0) << "\n";
  os << "# newton_tol=" << fmt(m.newton_tol) << "\n";
  os << "# rel_tol=" << fmt(m.quad.rel_tol) << "\n";
  os << "# abs_tol=" << fmt(m.quad.abs_tol) << "\n";
  os << "# max_panels=" << m.quad.max_panels << "\n";
  os << "# failures=" << m.failures << "\n";
  for (const auto& f : rep.failures)
    os << "# failure n=" << f.n << " box=" << fmt(f.box.re_min) << ":" << fmt(f.box.re_max) << ":"
       << fmt(f.box.im_min) << ":" << fmt(f.box.im_max) << " " << f.what << "\n";
  os << kHeader << "\n";
  for (const auto& r : rep.records)
    os << r.mode.d << "," << r.mode.n << "," << fmt(r.k.real()) << "," << fmt(r.k.imag()) << "," << fmt(r.residual)
       << "," << r.multiplicity << "\n";
}

std::string manifest_json(const TableManifest& m, const std::map<std::string, std::string>& provenance,
                          double runtime_seconds) {
  nlohmann::ordered_json j;
  j["tool"] = "bte";
  j["version"] = kToolVersion;
  j["d"] = m.d;
  j["box"] = {{"re_min", m.box.re_min}, {"re_max", m.box.re_max}, {"im_min", m.box.im_min}, {"im_max", m.box.im_max}};
  j["n_max_used"] = m.n_max_used;
  j["tolerances"] = {{"newton_tol", m.newton_tol},
                     {"rel_tol", m.quad.rel_tol},
                     {"abs_tol", m.quad.abs_tol},
                     {"max_panels", m.quad.max_panels}};
  j["strip_margin"] = m.strip_margin;
  j["strip_vacuous"] = m.strip_vacuous;
  j["failures"] = m.failures;
  j["provenance"] = provenance;
  j["runtime_seconds"] = runtime_seconds;
  return j.dump(2) + "\n";
}

ParsedTable read_table(std::istream& is) {
  ParsedTable t;
  TableManifest m;
  bool any_manifest = false, header = false;
  std::string line;
  int ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (header) throw ConfigError("table line " + std::to_string(ln) + ": manifest after header");
      auto eq = line.find('=');
      if (line.rfind("# ", 0) != 0 || eq == std::string::npos) continue;
      std::string key = line.substr(2, eq - 2), val = line.substr(eq + 1);
      if (key.find(' ') != std::string::npos) continue;  // free-form lines such as failures
      any_manifest = true;
      if (key == "d") {
        m.d = parse_int(val, ln);
      } else if (key == "box") {
        auto p = split(val, ':');
        if (p.size() != 4) throw ConfigError("table line " + std::to_string(ln) + ": box needs 4 numbers");
        m.box = {parse_double(p[0], ln), parse_double(p[1], ln), parse_double(p[2], ln), parse_double(p[3], ln)};
      } else if (key == "n_max_used") {
        m.n_max_used = parse_int(val, ln);
      } else if (key == "strip_margin") {
        m.strip_margin = parse_double(val, ln);
      } else if (key == "strip_vacuous") {
        m.strip_vacuous = parse_int(val, ln) != 0;
      } else if (key == "newton_tol") {
        m.newton_tol = parse_double(val, ln);
      } else if (key == "rel_tol") {
        m.quad.rel_tol = parse_double(val, ln);
      } else if (key == "abs_tol") {
        m.quad.abs_tol = parse_double(val, ln);
      } else if (key == "max_panels") {
        m.quad.max_panels = parse_int(val, ln);
      } else if (key == "failures") {
        m.failures = parse_int(val, ln);
      }
      continue;
    }
    if (!header) {
      if (line != kHeader) throw ConfigError("table line " + std::to_string(ln) + ": expected header '" + kHeader + "'");
      header = true;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 6) throw ConfigError("table line " + std::to_string(ln) + ": expected 6 fields");
    EigenvalueRecord r;
    r.mode.d = parse_int(f[0], ln);
    r.mode.n = parse_int(f[1], ln);
    if ((r.mode.d != 2 && r.mode.d != 3) || r.mode.n < 0)
      throw ConfigError("table line " + std::to_string(ln) + ": bad mode");
    r.k = {parse_double(f[2], ln), parse_double(f[3], ln)};
    r.residual = parse_double(f[4], ln);
    r.multiplicity = parse_int(f[5], ln);
    r.newton_iters = 0;
    t.records.push_back(r);
  }
  if (!header) throw ConfigError("table: missing header row");
  if (any_manifest) t.manifest = m;
  return t;
}

}  // namespace bte
