// Fixed-mode strip escape. The zeros of B_n are symmetric about the real
// axis, so only the upper half [0, X] x [0, H] is counted.
#include <cmath>

#include "bte/zero_finder.hpp"
#include "doctest.h"

using namespace bte;

namespace {

int upper_count(int n, double x0, double x1, double h) {
  int total = 0;
  for (const auto& c : isolate_zero_cells({2, n}, {x0, x1, 0.0, h}, 0.5, ZeroFinderConfig{})) total += c.count;
  return total;
}

}  // namespace

// Expected to fail: for H = 5 the count keeps growing by roughly one zero per
// pi of Re k until Re k ~ 1e3, since Im k of the n-th family only grows like
// (1/2) ln Re k. See the README.
TEST_CASE("per-mode count in the strip |Im k| < 5 is stable from X = 100 to X = 200") {
  for (int n = 0; n <= 5; ++n) {
    int head = upper_count(n, 0.0, 100.0, 5.0);
    int annex = upper_count(n, 100.0, 200.0, 5.0);
    INFO("n = " << n << ": " << head << " zeros below Re k = 100, " << annex << " more up to 200");
    CHECK(annex == 0);
  }
}

// What does hold: along one family the lowest |Im k| moves away from the axis.
TEST_CASE("lowest zero height grows with Re k") {
  for (int n : {0, 3}) {
    double prev = 0.0;
    for (double x : {20.0, 60.0, 120.0, 190.0}) {
      double lowest = INFINITY;
      for (const auto& c : isolate_zero_cells({2, n}, {x, x + 8.0, 0.5, 6.0}, 0.5, ZeroFinderConfig{})) {
        EigenvalueRecord r = newton_refine({2, n},
                                           {0.5 * (c.box.re_min + c.box.re_max), 0.5 * (c.box.im_min + c.box.im_max)},
                                           1e-11, ZeroFinderConfig{}, c.box, c.count);
        lowest = std::min(lowest, r.k.imag());
      }
      INFO("n = " << n << ", window at " << x);
      REQUIRE(std::isfinite(lowest));
      CHECK(lowest > prev);
      prev = lowest;
    }
  }
}
