#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bte/zero_finder.hpp"

namespace bte {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { Scan, Verify, Plot };
enum class Suite { SpecialFn, Symmetry, Mellin, Regimes, Strip, LogGrowth };

const char* to_string(Suite s);
Suite suite_from_string(const std::string& s);  // ConfigError on unknown names
std::vector<Suite> all_suites();

struct RunConfig {
  Command command = Command::Scan;
  int d = 2;
  ContourBox box{0.0, 40.0, -8.0, 8.0};
  std::optional<std::pair<int, int>> n_range;  // empty: auto from mode_truncation_bound
  QuadratureConfig quad;
  double newton_tol = 1e-11;
  std::vector<Suite> suites;  // empty means all
  std::string out;            // table (scan), report (verify) or image (plot)
  std::string table;          // plot input
  int threads = 0;

  // Where each field's value came from: "default", "file" or "flag".
  std::map<std::string, std::string> provenance;
};

// Values are strings (flags) or JSON scalars/arrays (file). Keys:
//   dim, re, im, n, tol, rel_tol, abs_tol, max_panels, suites, out, table.
// Ranges are "lo:hi"; n is "auto" or "lo:hi".
using ConfigValues = std::map<std::string, std::string>;

// file_text is the JSON config document ("" for none); flags override it.
// Every offending field is named in the ConfigError message.
RunConfig load_config(Command cmd, const std::string& file_text, const ConfigValues& flags);

// Table: '#'-prefixed manifest lines, then a header row and one line per
// record. Doubles are written in shortest round-trip form, so a read gives
// back the exact values.
struct TableManifest {
  int d = 2;
  ContourBox box;
  int n_max_used = 0;
  double strip_margin = 0.0;
  bool strip_vacuous = false;
  double newton_tol = 0.0;
  QuadratureConfig quad;
  int failures = 0;
};

TableManifest manifest_of(const ScanReport& rep, const RunConfig& cfg);
void write_table(std::ostream& os, const ScanReport& rep, const RunConfig& cfg);
std::string manifest_json(const TableManifest& m, const std::map<std::string, std::string>& provenance,
                          double runtime_seconds);

struct ParsedTable {
  std::optional<TableManifest> manifest;
  std::vector<EigenvalueRecord> records;
};
ParsedTable read_table(std::istream& is);  // ConfigError on malformed input

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  bool passed() const;
};

VerificationReport run_suite(Suite s, const RunConfig& cfg);
std::string report_json(const std::vector<VerificationReport>& reports, const RunConfig& cfg);

// Scatter of the records in the k-plane as SVG. Same input, same bytes.
std::string render_svg(const ParsedTable& t);

}  // namespace bte
