// bte: scan for Born transmission eigenvalues, run the verification suites,
// plot a table. Exit codes: 0 ok, 1 error (or failed checks), 2 partial scan.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bte/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bte::ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bte::ConfigError("cannot write '" + path + "'");
  out << text;
  if (!out) throw bte::ConfigError("write failed for '" + path + "'");
}

int do_scan(const bte::RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  bte::ZeroFinderConfig zc;
  zc.quad = cfg.quad;
  zc.threads = cfg.threads;
  bte::ScanReport rep = bte::scan_box(cfg.box, cfg.d, cfg.n_range, zc, cfg.newton_tol);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostringstream table;
  bte::write_table(table, rep, cfg);
  write_file(cfg.out, table.str());
  write_file(cfg.out + ".manifest.json", bte::manifest_json(bte::manifest_of(rep, cfg), cfg.provenance, secs));

  std::cout << rep.records.size() << " eigenvalues over n = 0.." << rep.n_max_used << ", strip margin "
            << rep.strip_margin << (rep.strip_vacuous ? " (vacuous)" : "") << ", " << secs << " s\n";
  if (!rep.failures.empty()) {
    std::cerr << rep.failures.size() << " cell failures; first: n=" << rep.failures.front().n << " "
              << rep.failures.front().what << "\n";
    return 2;
  }
  return 0;
}

int do_verify(const bte::RunConfig& cfg) {
  std::vector<bte::VerificationReport> reps;
  std::string first_fail;
  for (bte::Suite s : cfg.suites) {
    reps.push_back(bte::run_suite(s, cfg));
    const auto& r = reps.back();
    for (const auto& c : r.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << r.suite << "." << c.name << " measured=" << c.measured
                << " tol=" << c.tolerance << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
      if (!c.passed && first_fail.empty()) first_fail = r.suite + "." + c.name;
    }
    for (const auto& w : r.warnings) std::cout << "WARN " << r.suite << ": " << w << "\n";
  }
  write_file(cfg.out, bte::report_json(reps, cfg));
  if (!first_fail.empty()) {
    std::cerr << "verification failed: " << first_fail << "\n";
    return 1;
  }
  return 0;
}

int do_plot(const bte::RunConfig& cfg) {
  std::istringstream in(slurp(cfg.table));
  bte::ParsedTable t = bte::read_table(in);
  write_file(cfg.out, bte::render_svg(t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Born transmission eigenvalues: scan, verify, plot"};
  app.require_subcommand(1);

  struct Flags {
    std::string dim, re, im, n, tol, rel_tol, out, config, suites, table;
  };
  Flags f;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", f.dim, "dimension, 2 or 3");
    sub->add_option("--re", f.re, "real range lo:hi");
    sub->add_option("--im", f.im, "imaginary range lo:hi");
    sub->add_option("--n", f.n, "modes: auto or lo:hi");
    sub->add_option("--tol", f.tol, "Newton tolerance");
    sub->add_option("--rel-tol", f.rel_tol, "quadrature relative tolerance");
    sub->add_option("--out", f.out, "output path");
    sub->add_option("--config", f.config, "JSON config file");
  };
  CLI::App* scan = app.add_subcommand("scan", "find eigenvalues in a box");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* plot = app.add_subcommand("plot", "render an eigenvalue table as SVG");
  add_common(scan);
  add_common(verify);
  verify->add_option("--suites", f.suites, "comma list: SpecialFn,Symmetry,Mellin,Regimes,Strip,LogGrowth");
  plot->add_option("table", f.table, "input table")->required();
  plot->add_option("--out", f.out, "output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  bte::ConfigValues flags;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) flags[key] = v;
  };
  put("dim", f.dim);
  put("re", f.re);
  put("im", f.im);
  put("n", f.n);
  put("tol", f.tol);
  put("rel_tol", f.rel_tol);
  put("out", f.out);
  put("suites", f.suites);
  put("table", f.table);

  bte::Command cmd = scan->parsed() ? bte::Command::Scan : verify->parsed() ? bte::Command::Verify : bte::Command::Plot;
  try {
    bte::RunConfig cfg = bte::load_config(cmd, f.config.empty() ? "" : slurp(f.config), flags);
    switch (cmd) {
      case bte::Command::Scan: return do_scan(cfg);
      case bte::Command::Verify: return do_verify(cfg);
      case bte::Command::Plot: return do_plot(cfg);
    }
  } catch (const bte::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
