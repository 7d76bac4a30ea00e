#include <chrono>
#include <cmath>
#include <functional>

#include "bte/asymptotics.hpp"
#include "bte/cli.hpp"
#include "json.hpp"

namespace bte {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  double measured = 0.0;
  bool passed = false;
  std::string note;
};

// Runs one check; an exception is a failed check carrying the message.
void run(VerificationReport& rep, const std::string& name, double tol, const std::function<Outcome()>& body) {
  CheckResult c;
  c.name = name;
  c.tolerance = tol;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    c.measured = o.measured;
    c.passed = o.passed;
    c.note = o.note;
  } catch (const std::exception& e) {
    c.measured = NAN;
    c.passed = false;
    c.note = std::string("error: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.checks.push_back(std::move(c));
}

Outcome at_most(double measured, double tol) { return {measured, measured <= tol, ""}; }

// --- SpecialFn -------------------------------------------------------------

void suite_special(VerificationReport& rep) {
  // Olver two-term form against bessel_j on a polar grid; the constant is
  // max nu^2 |ratio - 1|.
  run(rep, "olver_uniform_constant", 10.0, [] {
    double c = 0.0;
    for (double nu : {20.0, 40.0, 80.0})
      for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 20; ++j) {
          double r = 0.2 + 2.8 * i / 9.0;
          double a = (j + 0.5) * (4.0 * kPi / 3.0) / 20.0 - 2.0 * kPi / 3.0;
          Complex z = std::polar(r, a);
          c = std::max(c, nu * nu * std::abs(olver_j(nu, z) / bessel_j(nu, nu * z) - 1.0));
        }
    return at_most(c, 10.0);
  });
  run(rep, "airy_tail_identity", 1e-9, [] {
    double worst = 0.0;
    QuadratureConfig q;
    q.rel_tol = 1e-14;
    q.abs_tol = 0.0;
    for (double a : {-2.0, 0.0, 1.0, 3.0}) {
      auto g = [](double x) -> Complex {
        double ai = airy_ai(Complex(x, 0.0)).real();
        return ai * ai;
      };
      double quad = integrate_gk(g, a, 12.0, q, 1.0).value.real();
      worst = std::max(worst, std::abs(quad - airy_tail_integral(a)) / std::abs(quad));
    }
    return at_most(worst, 1e-9);
  });
  run(rep, "airy_prime_finite_difference", 1e-8, [] {
    const double h = 1e-5;
    double fd = (airy_ai(1.0 + h) - airy_ai(1.0 - h)).real() / (2 * h);
    double an = airy_ai_prime(1.0).real();
    return at_most(std::abs(fd - an) / std::abs(an), 1e-8);
  });
  run(rep, "airy_prime_bound_constant", INFINITY, [] {
    // |Ai'(x)| <= C (1 + |x|^{1/4}) on the real line; C is reported.
    double c = 0.0;
    for (int i = -2000; i <= 2000; ++i) {
      double x = i * 0.025;
      c = std::max(c, std::abs(airy_ai_prime(x)) / (1.0 + std::pow(std::abs(x), 0.25)));
    }
    return Outcome{c, std::isfinite(c), "measured C on [-50, 50]"};
  });
}

// --- Symmetry --------------------------------------------------------------

void suite_symmetry(VerificationReport& rep, const RunConfig& cfg) {
  std::vector<Complex> grid;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) grid.emplace_back(0.5 + 1.05 * i, -3.0 + 6.0 * j / 9.0 + 0.05);
  auto sym = [&](bool negate) {
    double worst = 0.0;
    for (int d : {2, 3})
      for (int n = 0; n <= 10; ++n)
        for (Complex k : grid) {
          Complex b = bte_value(k, {d, n}, cfg.quad);
          Complex other = bte_value(negate ? -std::conj(k) : std::conj(k), {d, n}, cfg.quad);
          worst = std::max(worst, std::abs(other - std::conj(b)) / std::abs(b));
        }
    return at_most(worst, 1e-11);
  };
  run(rep, "reflection_minus_conj", 1e-11, [&] { return sym(true); });
  run(rep, "reflection_conj", 1e-11, [&] { return sym(false); });

  // Theorem (i): Bt > 0 on both axes (the prefactor carries the sign (-1)^n
  // on the imaginary axis), for every mode up to the truncation bound.
  auto axis = [&](bool imaginary) {
    int worst = 0;
    for (int d : {2, 3}) {
      int nmax = mode_truncation_bound({0.0, 60.0, -1e-9, 1e-9}, cfg.quad, d);
      for (int n = 0; n <= nmax; ++n)
        for (int j = 1; j <= 24; ++j) {
          double x = 2.5 * j;
          Complex k = imaginary ? Complex(0.0, x) : Complex(x, 0.0);
          ReducedBte r = bte_reduced(k, {d, n}, cfg.quad, false);
          if (!(r.value.real() > 0.0) || std::abs(r.value.imag()) > 1e-12 * r.l1) ++worst;
        }
    }
    return Outcome{double(worst), worst == 0, "violations on k = 2.5, 5, ..., 60"};
  };
  run(rep, "real_axis_positive", 0.0, [&] { return axis(false); });
  run(rep, "imaginary_axis_sign", 0.0, [&] { return axis(true); });
}

// --- Mellin ----------------------------------------------------------------

double direct_mellin_j1_sq_half() {
  // int_0^inf t^{-1/2} J_1(t)^2 dt: quadrature to T = 200 wavelengths, then the
  // leading large-t form J_1^2 ~ (1 - sin 2t) / (pi t), integrated by parts.
  const double T = 400.0 * kPi;
  QuadratureConfig q;
  q.rel_tol = 1e-13;
  q.abs_tol = 0.0;
  auto g = [](double t) -> Complex {
    Complex j = bessel_j(1.0, t);
    return std::pow(t, -0.5) * (j * j);
  };
  double head = integrate_gk(g, 0.0, T, q, 2.0).value.real();
  const double a = 1.5;
  double sin_tail = std::cos(2 * T) / (2 * std::pow(T, a)) + a * std::sin(2 * T) / (4 * std::pow(T, a + 1));
  return head + (2.0 / std::sqrt(T) - sin_tail) / kPi;
}

void suite_mellin(VerificationReport& rep) {
  run(rep, "mellin_j_squared_direct", 1e-6, [] {
    double m = mellin_j_squared(0.5, 1.0).real();
    double dmel = direct_mellin_j1_sq_half();
    return at_most(std::abs(m - dmel) / std::abs(dmel), 1e-6);
  });
  for (double xi : {5.0, 10.0, 20.0})
    for (double nu : {0.0, 1.0, 3.0}) {
      std::string tag = "xi=" + std::to_string(int(xi)) + ",nu=" + std::to_string(int(nu));
      run(rep, "parseval_vs_direct[" + tag + "]", 1e-6, [&] {
        double con = parseval_eval(xi, nu, 0.5, 2).real();
        double dir = parseval_direct(xi, nu, 0.5, 2);
        double e = std::abs(con - dir) / std::abs(dir);
        return at_most(e, 1e-6);
      });
      run(rep, "contour_invariance[" + tag + "]", 1e-8, [&] {
        double lo = INFINITY, hi = -INFINITY;
        for (double c : {0.3, 0.5, 0.7}) {
          MellinConfig m;
          m.c = c;
          double v = parseval_eval(xi, nu, 0.5, 2, m).real();
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        double e = (hi - lo) / std::abs(hi);
        return at_most(e, 1e-8);
      });
    }
  run(rep, "i3_limit_eps_decreasing", 0.0, [] {
    double prev = INFINITY;
    bool ok = true;
    double last = 0.0;
    for (double eps : {0.5, 0.4, 0.2, 0.1}) {
      last = i3_limit(eps, 2).real();
      ok = ok && last < prev && last > 0.0;
      prev = last;
    }
    return Outcome{last, ok, "value at eps = 0.1"};
  });
  for (int d : {2, 3})
    run(rep, "i3_limit_vs_probe[d=" + std::to_string(d) + "]", 0.10, [d] {
      double lim = i3_limit(0.5, d).real();
      std::vector<double> e;
      for (int n : {20, 40, 80}) e.push_back(std::abs(i3_probe(n, 0.5, d) / lim - 1.0));
      bool mono = e[1] <= e[0] && e[2] <= e[1];
      return Outcome{e[2], e[2] <= 0.10 && mono, mono ? "" : "not monotone over n = 20, 40, 80"};
    });
}

// --- Regimes ---------------------------------------------------------------

Outcome probe_outcome(const RegimeProbe& p, double tol) {
  double last = p.samples.back().rel_err();
  bool mono = p.monotone();
  std::string note;
  for (const auto& s : p.samples) note += (note.empty() ? "" : " ") + std::to_string(s.rel_err());
  if (!mono) note += " (not monotone)";
  return {last, last <= tol && mono, "rel errs " + note};
}

void suite_regimes(VerificationReport& rep, const RunConfig& cfg) {
  QuadratureConfig q = cfg.quad;
  q.max_panels = std::max(q.max_panels, 1 << 16);
  run(rep, "k_dominant_d2", 0.25, [&] { return probe_outcome(probe_k_dominant(5, {800, 1600, 3200}, 2, q), 0.25); });
  run(rep, "k_dominant_d3", 0.10, [&] {
    auto p = probe_k_dominant(5, {800, 1600, 3200}, 3, q);
    double last = p.samples.back().rel_err();
    return Outcome{last, last <= 0.10, "at k = 3200"};
  });
  run(rep, "comparable_L2_d2", 0.05,
      [&] { return probe_outcome(probe_comparable(2.0, {100, 200, 400}, 2, q), 0.05); });
  run(rep, "airy_R1_d2", 0.05, [&] { return probe_outcome(probe_airy(1.0, {200, 400, 800}, 2, q), 0.05); });
  run(rep, "n_dominant_d2", 0.10, [&] {
    NDominantProbe r = n_dominant_probe(160, 10.0, 2, false, q);
    double ratio = r.measured.real() / r.predicted;
    double im = std::abs(r.measured.imag()) / std::abs(r.measured);
    return Outcome{std::abs(ratio - 1.0), std::abs(ratio - 1.0) <= 0.10 && im <= 0.05,
                   "ratio " + std::to_string(ratio) + ", rel imag " + std::to_string(im)};
  });
  run(rep, "n_dominant_sequence_d2", 0.10,
      [&] { return probe_outcome(probe_n_dominant({40, 80, 160}, 10.0, 2, q), 0.10); });
  run(rep, "phase_collapse", 0.0, [] {
    // n |Im at(k t / n)| <= |Im k| for n / |k| >= 2, |Im k| <= 0.01.
    double worst = -INFINITY;
    for (int n : {20, 40, 80})
      for (double im : {-0.01, -0.001, 0.001, 0.01})
        for (double re : {0.5, 2.0, 5.0, 10.0}) {
          Complex k(re, im);
          if (n < 2.0 * std::abs(k)) continue;
          for (int i = 1; i <= 100; ++i) {
            double t = i / 100.0;
            worst = std::max(worst, n * std::abs(alpha_tilde(k * t / double(n)).imag()) - std::abs(im));
          }
        }
    return Outcome{worst, worst <= 0.0, "max of n |Im at| - |Im k|"};
  });
}

// --- Strip -----------------------------------------------------------------

void suite_strip(VerificationReport& rep, const RunConfig& cfg) {
  ZeroFinderConfig zc;
  zc.quad = cfg.quad;
  zc.threads = cfg.threads;
  ScanReport s;
  bool scanned = false;
  run(rep, "scan_completes", 0.0, [&] {
    s = scan_box(cfg.box, cfg.d, cfg.n_range, zc, cfg.newton_tol);
    scanned = true;
    return Outcome{double(s.failures.size()), s.failures.empty(),
                   std::to_string(s.records.size()) + " records over n <= " + std::to_string(s.n_max_used)};
  });
  if (!scanned) return;
  if (s.strip_vacuous) rep.warnings.push_back("no eigenvalues in the box; the strip margin is vacuous");
  run(rep, "strip_margin_positive", 0.0, [&] {
    return Outcome{s.strip_margin, s.strip_margin > 0.0, s.strip_vacuous ? "vacuous (half-height)" : ""};
  });
  run(rep, "records_outside_strip", 0.0, [&] {
    int bad = 0;
    for (const auto& r : s.records)
      if (std::abs(r.k.imag()) < s.strip_margin || r.k.real() == 0.0 || r.k.imag() == 0.0) ++bad;
    return Outcome{double(bad), bad == 0, ""};
  });
  run(rep, "winding_equals_records", 0.0, [&] {
    std::map<int, int> counted;
    for (const auto& r : s.records) counted[r.mode.n] += r.multiplicity;
    int bad = 0;
    for (const auto& [n, w] : s.total_winding_per_mode) {
      auto it = counted.find(n);
      if ((it == counted.end() ? 0 : it->second) != w) ++bad;
    }
    return Outcome{double(bad), bad == 0, "modes with a mismatch"};
  });
}

// --- LogGrowth -------------------------------------------------------------

void suite_log_growth(VerificationReport& rep, const RunConfig& cfg) {
  QuadratureConfig q = cfg.quad;
  q.max_panels = std::max(q.max_panels, 1 << 16);
  run(rep, "i2_closed_form", 1e-15, [&] {
    LogGrowthParts p = log_growth_decomposition(100.0, 3, 10.0, q);
    double want = std::log(100.0) + 1.0 - 0.1 - std::log(10.0);
    return at_most(std::abs(p.i2 - want), 1e-15);
  });
  run(rep, "reconstruction", 1e-8, [&] {
    double worst = 0.0;
    for (double k : {100.0, 1e3, 1e4}) {
      LogGrowthParts p = log_growth_decomposition(k, 3, 10.0, q);
      Complex pkb = kPi * k * bte_value(k, {2, 3}, q);
      worst = std::max(worst, std::abs(p.i1 + p.i2 + p.i3 - pkb) / std::abs(pkb));
    }
    return at_most(worst, 1e-8);
  });
  run(rep, "log_growth_bounded", INFINITY, [&] {
    double sup = 0.0;
    for (double x : {100.0, 1e3, 1e4})
      for (double y : {-1.0, 0.0, 1.0}) {
        Complex k(x, y);
        sup = std::max(sup, std::abs(kPi * k * bte_value(k, {2, 3}, q) - std::log(x)));
      }
    return Outcome{sup, std::isfinite(sup), "sup |pi k B_3 - ln Re k| over the strip grid"};
  });
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

VerificationReport run_suite(Suite s, const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = to_string(s);
  switch (s) {
    case Suite::SpecialFn: suite_special(rep); break;
    case Suite::Symmetry: suite_symmetry(rep, cfg); break;
    case Suite::Mellin: suite_mellin(rep); break;
    case Suite::Regimes: suite_regimes(rep, cfg); break;
    case Suite::Strip: suite_strip(rep, cfg); break;
    case Suite::LogGrowth: suite_log_growth(rep, cfg); break;
  }
  return rep;
}

std::string report_json(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["tool"] = "bte";
  j["version"] = kToolVersion;
  j["config"] = {{"d", cfg.d},
                 {"box", {cfg.box.re_min, cfg.box.re_max, cfg.box.im_min, cfg.box.im_max}},
                 {"newton_tol", cfg.newton_tol},
                 {"rel_tol", cfg.quad.rel_tol},
                 {"abs_tol", cfg.quad.abs_tol},
                 {"max_panels", cfg.quad.max_panels},
                 {"provenance", cfg.provenance}};
  bool all = true;
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["suite"] = r.suite;
    s["passed"] = r.passed();
    s["warnings"] = r.warnings;
    for (const auto& c : r.checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      cj["measured"] = c.measured;
      cj["tolerance"] = c.tolerance;
      cj["seconds"] = c.seconds;
      if (!c.note.empty()) cj["note"] = c.note;
      s["checks"].push_back(cj);
    }
    all = all && r.passed();
    j["suites"].push_back(s);
  }
  j["passed"] = all;
  return j.dump(2) + "\n";
}

}  // namespace bte
