#include <cmath>
#include <random>

#include "bte/zero_finder.hpp"
#include "doctest.h"
#include "oracles/bte_values.hpp"

using namespace bte;

namespace {

ContourBox around(Complex k, double h) { return {k.real() - h, k.real() + h, k.imag() - h, k.imag() + h}; }

// Plain argument principle: uniform samples of B_n itself along the boundary,
// no adaptivity, no reduction. Shares nothing with the library's sampler.
int dense_count(ModeSpec m, const ContourBox& b, int per_edge) {
  std::vector<Complex> pts;
  for (int i = 0; i < per_edge; ++i) pts.emplace_back(b.re_min + (b.re_max - b.re_min) * i / per_edge, b.im_min);
  for (int i = 0; i < per_edge; ++i) pts.emplace_back(b.re_max, b.im_min + (b.im_max - b.im_min) * i / per_edge);
  for (int i = 0; i < per_edge; ++i) pts.emplace_back(b.re_max - (b.re_max - b.re_min) * i / per_edge, b.im_max);
  for (int i = 0; i < per_edge; ++i) pts.emplace_back(b.re_min, b.im_max - (b.im_max - b.im_min) * i / per_edge);
  double total = 0.0;
  Complex prev = bte_value(pts.back(), m);
  for (Complex p : pts) {
    Complex v = bte_value(p, m);
    total += std::arg(v / prev);
    prev = v;
  }
  return static_cast<int>(std::lround(total / (2 * M_PI)));
}

}  // namespace

TEST_CASE("winding: zero-free box on the real axis") {
  ZeroFinderConfig zc;
  WindingResult w = boundary_winding({2, 0}, {2.9, 3.1, -0.1, 0.1}, zc);
  CHECK(w.count == 0);
  CHECK(w.phase_residual <= 1e-3);
}

TEST_CASE("winding around known zeros") {
  ZeroFinderConfig zc;
  for (const auto& z : oracle::kZeros) {
    WindingResult w = boundary_winding({z.d, z.n}, around(z.k, 0.01), zc);
    CHECK(w.count == 1);
    CHECK(w.phase_residual <= 1e-3);
  }
}

TEST_CASE("winding is additive over quadrants") {
  ZeroFinderConfig zc;
  ContourBox b{0.3, 12.1, 0.2, 6.3};
  int parent = boundary_winding({2, 1}, b, zc).count;
  double cx = 6.05, cy = 3.17;
  int sum = boundary_winding({2, 1}, {b.re_min, cx, b.im_min, cy}, zc).count +
            boundary_winding({2, 1}, {cx, b.re_max, b.im_min, cy}, zc).count +
            boundary_winding({2, 1}, {b.re_min, cx, cy, b.im_max}, zc).count +
            boundary_winding({2, 1}, {cx, b.re_max, cy, b.im_max}, zc).count;
  CHECK(parent > 0);
  CHECK(sum == parent);
}

TEST_CASE("winding agrees with a dense uniform count") {
  ZeroFinderConfig zc;
  for (int n : {0, 2, 6}) {
    ContourBox b{0.4, 15.3, 0.3, 5.7};
    CHECK(boundary_winding({2, n}, b, zc).count == dense_count({2, n}, b, 1500));
  }
  ContourBox b3{0.4, 15.3, -5.7, -0.3};
  CHECK(boundary_winding({3, 1}, b3, zc).count == dense_count({3, 1}, b3, 1500));
}

TEST_CASE("isolate_zeros") {
  ZeroFinderConfig zc;
  CHECK(isolate_zeros({2, 0}, {2.9, 3.1, -0.1, 0.1}, 0.5, zc).empty());
  ContourBox b{0.0, 20.0, 0.0, 6.0};
  int w = boundary_winding({2, 0}, b, zc).count;
  auto cells = isolate_zero_cells({2, 0}, b, 0.5, zc);
  int sum = 0;
  for (const auto& c : cells) {
    CHECK(c.count >= 1);
    CHECK(c.box.diagonal() <= 0.5);
    sum += c.count;
  }
  CHECK(sum == w);
  // cells are disjoint
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const auto &p = cells[i].box, &q = cells[j].box;
      bool overlap = p.re_min < q.re_max && q.re_min < p.re_max && p.im_min < q.im_max && q.im_min < p.im_max;
      CHECK_FALSE(overlap);
    }
  CHECK_THROWS_AS(isolate_zeros({2, 0}, b, 0.0, zc), DomainViolation);
}

TEST_CASE("newton_refine") {
  ZeroFinderConfig zc;
  for (const auto& z : oracle::kZeros) {
    EigenvalueRecord r = newton_refine({z.d, z.n}, z.k + Complex(1e-3, -1e-3), 1e-11, zc);
    CHECK(std::abs(r.k - z.k) <= 1e-9);
    CHECK(r.residual <= 1e-11);
    CHECK(r.newton_iters <= 20);
    // from the refined zero: nothing to do
    EigenvalueRecord again = newton_refine({z.d, z.n}, r.k, 1e-11, zc);
    CHECK(again.newton_iters == 0);
    CHECK(again.residual == r.residual);
    // the mirrored points are zeros too
    for (Complex s : {std::conj(r.k), -std::conj(r.k)}) {
      EigenvalueRecord m = newton_refine({z.d, z.n}, s, 1e-11, zc);
      CHECK(m.residual <= 1e-11);
      CHECK(std::abs(m.k - s) <= 1e-9);
    }
    // perturbed seed reproduces the same zero
    EigenvalueRecord p = newton_refine({z.d, z.n}, r.k + 1e-4 * Complex(1.0, 1.0), 1e-11, zc);
    CHECK(std::abs(p.k - r.k) <= 1e-8);
  }
  CHECK_THROWS_AS(newton_refine({2, 0}, 3.0, 1e-11, zc, ContourBox{2.9, 3.1, -0.1, 0.1}), NoConvergence);
}

TEST_CASE("scan of a small box") {
  ZeroFinderConfig zc;
  ContourBox b{0.1, 5.0, -1.0, 1.0};
  ScanReport r = scan_box(b, 2, std::nullopt, zc);
  for (const auto& e : r.records) CHECK(std::abs(e.k.imag()) > 0.0);
  CHECK(r.records.empty());
  CHECK(r.failures.empty());
  CHECK(r.strip_vacuous);
  CHECK(r.strip_margin == 1.0);
}

TEST_CASE("scan: determinism, restriction, records off the axes") {
  ZeroFinderConfig zc;
  ContourBox b{0.0, 12.0, -5.0, 5.0};
  ScanReport a = scan_box(b, 2, std::nullopt, zc);
  ScanReport c = scan_box(b, 2, std::nullopt, zc);
  REQUIRE(a.records.size() == c.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].k == c.records[i].k);
    CHECK(a.records[i].mode.n == c.records[i].mode.n);
  }
  CHECK(a.failures.empty());
  CHECK(!a.records.empty());
  for (const auto& e : a.records) CHECK(std::abs(e.k.real()) * std::abs(e.k.imag()) > 0.0);
  // per mode, the winding total matches the refined records
  std::map<int, int> counted;
  for (const auto& e : a.records) counted[e.mode.n] += e.multiplicity;
  for (const auto& [n, w] : a.total_winding_per_mode) CHECK(counted[n] == w);

  ScanReport one = scan_box(b, 2, std::make_pair(1, 1), zc);
  std::vector<Complex> full;
  for (const auto& e : a.records)
    if (e.mode.n == 1) full.push_back(e.k);
  REQUIRE(one.records.size() == full.size());
  for (std::size_t i = 0; i < full.size(); ++i) CHECK(std::abs(one.records[i].k - full[i]) <= 1e-12);

  // deterministic ordering by (n, Re, Im)
  for (std::size_t i = 1; i < a.records.size(); ++i) {
    const auto &p = a.records[i - 1], &q = a.records[i];
    CHECK(std::make_tuple(p.mode.n, p.k.real(), p.k.imag()) < std::make_tuple(q.mode.n, q.k.real(), q.k.imag()));
  }
}

TEST_CASE("scan with threads matches the serial scan") {
  ZeroFinderConfig serial, par;
  serial.threads = 1;
  par.threads = 3;
  ContourBox b{0.0, 9.0, -4.0, 4.0};
  ScanReport a = scan_box(b, 3, std::nullopt, serial), c = scan_box(b, 3, std::nullopt, par);
  REQUIRE(a.records.size() == c.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].k == c.records[i].k);
}

TEST_CASE("strip_margin") {
  ScanReport r;
  for (double im : {2.3, -2.3, 3.1, -3.1}) {
    EigenvalueRecord e;
    e.k = {5.0, im};
    r.records.push_back(e);
  }
  CHECK(strip_margin(r) == 2.3);
  CHECK_THROWS_AS(strip_margin(ScanReport{}), EmptyReport);
  ScanReport v = scan_box({0.0, 5.0, -1.0, 1.0}, 2, std::nullopt, ZeroFinderConfig{});
  CHECK(v.strip_vacuous);
  CHECK(v.strip_margin == 1.0);
}

TEST_CASE("scan input checks") {
  ZeroFinderConfig zc;
  CHECK_THROWS_AS(scan_box({1.0, 1.0, 0.0, 1.0}, 2, std::nullopt, zc), DomainViolation);
  CHECK_THROWS_AS(scan_box({-1.0, 1.0, 0.0, 1.0}, 2, std::nullopt, zc), DomainViolation);
  CHECK_THROWS_AS(scan_box({0.0, 1.0, 0.0, 1.0}, 2, std::make_pair(3, 1), zc), DomainViolation);
}

TEST_CASE("random boxes: additivity and agreement with refined zeros") {
  // Fixed seed; boxes in the upper half of [0, 20] x [0, 6], d = 2, n <= 3.
  std::mt19937_64 rng(20241014);
  std::uniform_real_distribution<double> ux(0.2, 18.0), uy(0.1, 5.0), uw(0.7, 2.5);
  std::uniform_int_distribution<int> un(0, 3);
  ZeroFinderConfig zc;
  int tested = 0;
  for (int trial = 0; trial < 12; ++trial) {
    int n = un(rng);
    double x = ux(rng), y = uy(rng), w = uw(rng);
    ContourBox b{x, x + w, y, y + w};
    std::vector<IsolatedCell> cells;
    try {
      cells = isolate_zero_cells({2, n}, b, 0.25, zc);
    } catch (const BoundaryTooClose&) {
      continue;  // a zero sits on this random edge even after jitter
    }
    int total = 0;
    for (const auto& c : cells) {
      total += c.count;
      EigenvalueRecord r = newton_refine({2, n}, {0.5 * (c.box.re_min + c.box.re_max), 0.5 * (c.box.im_min + c.box.im_max)},
                                         1e-11, zc, c.box, c.count);
      CHECK(r.residual <= 1e-11);
    }
    // split at a random interior line; counts add up
    double cut = b.re_min + 0.3 * w + 0.4 * w * std::uniform_real_distribution<double>(0, 1)(rng);
    try {
      int lhs = boundary_winding({2, n}, {b.re_min, cut, b.im_min, b.im_max}, zc).count;
      int rhs = boundary_winding({2, n}, {cut, b.re_max, b.im_min, b.im_max}, zc).count;
      int whole = boundary_winding({2, n}, b, zc).count;
      CHECK(lhs + rhs == whole);
      CHECK(whole == total);
      ++tested;
    } catch (const BoundaryTooClose&) {
    }
  }
  CHECK(tested >= 9);
}
