#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bte/bte_core.hpp"

namespace bte {

// Zeros are located on the reduced function Bt (see bte_core.hpp), which has
// the zeros of B_n away from k = 0 but is O(1) instead of O(|k|^{2n} / n!^2).
// "Modulus" and "residual" below are the scale-free ratio
//   rho(k) = |Bt(k)| / int f t^{2n} |S_nu(kt)|^2 dt  in [0, 1],
// i.e. how much the integrand cancels at k.

struct WindingResult {
  int count = 0;
  double phase_residual = 0.0;        // |total phase / 2pi - count|
  double boundary_min_modulus = 0.0;  // min rho over the boundary samples
  int samples = 0;
};

struct EigenvalueRecord {
  ModeSpec mode;
  Complex k;
  double residual = 0.0;  // rho at the returned k
  int multiplicity = 1;
  int newton_iters = 0;
};

struct CellFailure {
  int n = 0;
  ContourBox box;
  std::string what;
};

struct ScanReport {
  ContourBox box;
  int d = 2;
  int n_max_used = 0;
  std::vector<EigenvalueRecord> records;  // sorted by (n, Re k, Im k)
  double strip_margin = 0.0;
  bool strip_vacuous = false;  // no records; margin is the box half-height
  std::map<int, int> total_winding_per_mode;
  std::vector<CellFailure> failures;
};

struct ZeroFinderConfig {
  QuadratureConfig quad;
  double phase_step = 1.0471975511965976;  // refine until increments < pi/3 (< pi/2 required)
  double proximity = 1e-3;                 // BoundaryTooClose below proximity * median rho
  double jitter = 1e-3;                    // fraction of the box diagonal
  int max_retries = 5;
  int max_newton = 20;
  double cell_size = 0.5;
  int threads = 0;  // 0: default_thread_count()
};

WindingResult boundary_winding(ModeSpec mode, const ContourBox& box, const ZeroFinderConfig& cfg = {});

struct IsolatedCell {
  ContourBox box;
  int count = 0;
};

// Quadtree-style bisection (always across the longer side). Every returned
// cell has winding >= 1 and diagonal <= cell_size; the counts sum to the
// winding of `box`. BoundaryTooClose on `box` itself is retried with the
// edges pushed outward by jitter * diagonal.
std::vector<IsolatedCell> isolate_zero_cells(ModeSpec mode, const ContourBox& box, double cell_size,
                                             const ZeroFinderConfig& cfg = {});
std::vector<ContourBox> isolate_zeros(ModeSpec mode, const ContourBox& box, double cell_size,
                                      const ZeroFinderConfig& cfg = {});

// Newton on Bt (step multiplied by `multiplicity`). With a seed box the iterate
// must stay inside the box scaled 2x about its center. Throws NoConvergence.
EigenvalueRecord newton_refine(ModeSpec mode, Complex k0, double tol = 1e-11, const ZeroFinderConfig& cfg = {},
                               const std::optional<ContourBox>& seed_box = std::nullopt, int multiplicity = 1);

// All zeros of B_n in the box, box in the closed right half-plane. Modes are
// 0..n_max (n_max = mode_truncation_bound) or the inclusive n_range. Boxes
// symmetric about the real axis are scanned on the upper half and mirrored.
ScanReport scan_box(const ContourBox& box, int d, std::optional<std::pair<int, int>> n_range = std::nullopt,
                    const ZeroFinderConfig& cfg = {}, double tol = 1e-11);

// min |Im k| over the records; throws EmptyReport when there are none.
double strip_margin(const ScanReport& report);

}  // namespace bte
