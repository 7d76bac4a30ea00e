#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bte/cli.hpp"
#include "json.hpp"

namespace bte {

namespace {

using nlohmann::json;

const char* kSuiteNames[] = {"SpecialFn", "Symmetry", "Mellin", "Regimes", "Strip", "LogGrowth"};

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw ConfigError("config field '" + field + "': " + why);
}

double to_double(const std::string& field, const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || !std::isfinite(v)) bad(field, "expected a number, got '" + s + "'");
  return v;
}

int to_int(const std::string& field, const std::string& s) {
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || v < -1000000000L || v > 1000000000L)
    bad(field, "expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

std::pair<std::string, std::string> split_range(const std::string& field, const std::string& s) {
  // "lo:hi"; lo may itself be negative, so split at the last ':'
  auto p = s.rfind(':');
  if (p == std::string::npos || p == 0 || p + 1 == s.size()) bad(field, "expected lo:hi, got '" + s + "'");
  return {s.substr(0, p), s.substr(p + 1)};
}

// Flattens a JSON config value to the string form the flags use.
std::string flatten(const std::string& field, const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  if (v.is_array()) {
    if (field == "suites") {
      std::string s;
      for (const auto& e : v) {
        if (!e.is_string()) bad(field, "entries must be strings");
        if (!s.empty()) s += ",";
        s += e.get<std::string>();
      }
      return s;
    }
    if (v.size() == 2 && v[0].is_number() && v[1].is_number())
      return flatten(field, v[0]) + ":" + flatten(field, v[1]);
  }
  bad(field, "unsupported value " + v.dump());
}

void apply(RunConfig& c, const std::string& key, const std::string& val) {
  if (key == "dim") {
    int d = to_int(key, val);
    if (d != 2 && d != 3) bad(key, "must be 2 or 3, got " + val);
    c.d = d;
  } else if (key == "re" || key == "im") {
    auto [a, b] = split_range(key, val);
    double lo = to_double(key, a), hi = to_double(key, b);
    if (!(lo < hi)) bad(key, "needs lo < hi");
    if (key == "re") {
      if (lo < 0.0) bad(key, "box must lie in the closed right half-plane");
      c.box.re_min = lo;
      c.box.re_max = hi;
    } else {
      c.box.im_min = lo;
      c.box.im_max = hi;
    }
  } else if (key == "n") {
    if (val == "auto") {
      c.n_range.reset();
    } else {
      auto [a, b] = split_range(key, val);
      int lo = to_int(key, a), hi = to_int(key, b);
      if (lo < 0 || hi < lo) bad(key, "needs 0 <= lo <= hi");
      c.n_range = {lo, hi};
    }
  } else if (key == "tol") {
    double t = to_double(key, val);
    if (!(t > 0.0)) bad(key, "must be > 0");
    c.newton_tol = t;
  } else if (key == "rel_tol" || key == "abs_tol") {
    double t = to_double(key, val);
    if (!(t > 0.0)) bad(key, "must be > 0");
    (key == "rel_tol" ? c.quad.rel_tol : c.quad.abs_tol) = t;
  } else if (key == "max_panels") {
    int m = to_int(key, val);
    if (m < 1) bad(key, "must be >= 1");
    c.quad.max_panels = m;
  } else if (key == "suites") {
    c.suites.clear();
    std::stringstream ss(val);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      if (item == "all") {
        c.suites = all_suites();
        continue;
      }
      try {
        c.suites.push_back(suite_from_string(item));
      } catch (const ConfigError&) {
        bad(key, "unknown suite '" + item + "'");
      }
    }
  } else if (key == "out") {
    c.out = val;
  } else if (key == "table") {
    c.table = val;
  } else if (key == "threads") {
    int t = to_int(key, val);
    if (t < 0) bad(key, "must be >= 0");
    c.threads = t;
  } else {
    bad(key, "unknown field");
  }
}

}  // namespace

const char* to_string(Suite s) { return kSuiteNames[static_cast<int>(s)]; }

Suite suite_from_string(const std::string& s) {
  for (int i = 0; i < 6; ++i)
    if (s == kSuiteNames[i]) return static_cast<Suite>(i);
  throw ConfigError("unknown suite '" + s + "'");
}

std::vector<Suite> all_suites() {
  return {Suite::SpecialFn, Suite::Symmetry, Suite::Mellin, Suite::Regimes, Suite::Strip, Suite::LogGrowth};
}

RunConfig load_config(Command cmd, const std::string& file_text, const ConfigValues& flags) {
  RunConfig c;
  c.command = cmd;
  for (const char* k : {"dim", "re", "im", "n", "tol", "rel_tol", "abs_tol", "max_panels", "suites", "out"})
    c.provenance[k] = "default";

  if (!file_text.empty()) {
    json doc;
    try {
      doc = json::parse(file_text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config file: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config file: top level must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      apply(c, it.key(), flatten(it.key(), it.value()));
      c.provenance[it.key()] = "file";
    }
  }
  for (const auto& [k, v] : flags) {
    apply(c, k, v);
    c.provenance[k] = "flag";
  }
  if (c.suites.empty()) c.suites = all_suites();
  if (c.out.empty()) {
    c.out = cmd == Command::Scan ? "bte_scan.csv" : cmd == Command::Verify ? "bte_verify.json" : "bte_plot.svg";
  }
  if (cmd == Command::Plot && c.table.empty()) bad("table", "plot needs an input table");
  return c;
}

}  // namespace bte
