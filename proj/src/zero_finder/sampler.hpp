#pragma once

#include <map>
#include <utility>

#include "bte/zero_finder.hpp"

namespace bte::detail {

struct PhaseSample {
  double phase = 0.0;
  double rho = 0.0;
};

// Memoizes arg Bt and rho per point. Edge samples sit on a lattice fixed by
// the root box, so sub-boxes reuse the parent's evaluations. Not thread-safe;
// one per (mode, task).
class PhaseSampler {
 public:
  PhaseSampler(ModeSpec mode, const ZeroFinderConfig& cfg, const ContourBox& root);
  PhaseSample at(Complex k);
  double lattice() const { return lattice_; }

 private:
  ModeSpec mode_;
  const ZeroFinderConfig& cfg_;
  double lattice_ = 0.25;
  std::map<std::pair<long long, long long>, PhaseSample> cache_;
};

WindingResult winding_with(PhaseSampler& sp, const ContourBox& box, const ZeroFinderConfig& cfg);

}  // namespace bte::detail
