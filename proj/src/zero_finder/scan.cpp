#include <algorithm>
#include <cmath>
#include <tuple>

#include "bte/parallel.hpp"
#include "bte/zero_finder.hpp"

namespace bte {

namespace {

struct ModeResult {
  bool counted = false;
  int winding = 0;
  std::vector<EigenvalueRecord> records;
  std::vector<CellFailure> failures;
};

Complex center(const ContourBox& b) {
  return {0.5 * (b.re_min + b.re_max), 0.5 * (b.im_min + b.im_max)};
}

// Newton from the cell center; on failure split the cell finer and seed from
// the children (two levels).
void refine_cell(ModeSpec mode, const IsolatedCell& cell, const ZeroFinderConfig& cfg, double tol, int depth,
                 ModeResult& out) {
  try {
    out.records.push_back(newton_refine(mode, center(cell.box), tol, cfg, cell.box, cell.count));
    return;
  } catch (const NoConvergence& e) {
    if (depth >= 2) {
      out.failures.push_back({mode.n, cell.box, e.what()});
      return;
    }
  }
  try {
    auto sub = isolate_zero_cells(mode, cell.box, 0.25 * cell.box.diagonal(), cfg);
    for (const auto& c : sub) refine_cell(mode, c, cfg, tol, depth + 1, out);
  } catch (const Error& e) {
    out.failures.push_back({mode.n, cell.box, e.what()});
  }
}

ModeResult scan_mode(ModeSpec mode, const ContourBox& work, bool mirror, const ZeroFinderConfig& cfg, double tol) {
  ModeResult r;
  std::vector<IsolatedCell> cells;
  try {
    cells = isolate_zero_cells(mode, work, cfg.cell_size, cfg);
  } catch (const Error& e) {
    r.failures.push_back({mode.n, work, e.what()});
    return r;
  }
  r.counted = true;
  for (const auto& c : cells) {
    r.winding += c.count;
    refine_cell(mode, c, cfg, tol, 0, r);
  }
  std::vector<EigenvalueRecord> kept;
  for (auto& rec : r.records) {
    if (rec.k.real() == 0.0 || rec.k.imag() == 0.0) {
      r.failures.push_back({mode.n, work, "refined zero on a coordinate axis"});
      continue;
    }
    kept.push_back(rec);
    if (mirror) {
      EigenvalueRecord m = rec;
      m.k = std::conj(rec.k);
      kept.push_back(m);
    }
  }
  r.records = std::move(kept);
  if (mirror) r.winding *= 2;
  return r;
}

}  // namespace

double strip_margin(const ScanReport& report) {
  if (report.records.empty()) throw EmptyReport("strip_margin: no eigenvalues in the report");
  double m = INFINITY;
  for (const auto& r : report.records) m = std::min(m, std::abs(r.k.imag()));
  return m;
}

ScanReport scan_box(const ContourBox& box, int d, std::optional<std::pair<int, int>> n_range,
                    const ZeroFinderConfig& cfg, double tol) {
  if (box.empty()) throw DomainViolation("scan_box: empty box");
  if (box.re_min < 0.0) throw DomainViolation("scan_box: box must lie in the closed right half-plane");
  validate(ModeSpec{d, 0});
  ScanReport rep;
  rep.box = box;
  rep.d = d;
  rep.n_max_used = mode_truncation_bound(box, cfg.quad, d);
  int lo = 0, hi = rep.n_max_used;
  if (n_range) {
    lo = n_range->first;
    hi = n_range->second;
    if (lo < 0 || hi < lo) throw DomainViolation("scan_box: bad n_range");
  }

  // B_n(conj k) = conj B_n(k): a box symmetric about the real axis only needs
  // its upper half. The real axis itself is zero-free.
  const bool mirror = box.im_min < 0.0 && box.im_min == -box.im_max;
  ContourBox work = box;
  if (mirror) work.im_min = 0.0;

  std::vector<ModeResult> results(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(
      results.size(), [&](std::size_t i) { results[i] = scan_mode({d, lo + static_cast<int>(i)}, work, mirror, cfg, tol); },
      cfg.threads);

  for (std::size_t i = 0; i < results.size(); ++i) {
    int n = lo + static_cast<int>(i);
    auto& r = results[i];
    if (r.counted) rep.total_winding_per_mode[n] = r.winding;
    rep.records.insert(rep.records.end(), r.records.begin(), r.records.end());
    rep.failures.insert(rep.failures.end(), r.failures.begin(), r.failures.end());
  }
  std::sort(rep.records.begin(), rep.records.end(), [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
    return std::make_tuple(a.mode.n, a.k.real(), a.k.imag()) < std::make_tuple(b.mode.n, b.k.real(), b.k.imag());
  });
  try {
    rep.strip_margin = strip_margin(rep);
  } catch (const EmptyReport&) {
    rep.strip_margin = 0.5 * (box.im_max - box.im_min);
    rep.strip_vacuous = true;
  }
  return rep;
}

}  // namespace bte
