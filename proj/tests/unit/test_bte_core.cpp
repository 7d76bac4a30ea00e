#include <cmath>

#include "bte/bte_core.hpp"
#include "bte/zero_finder.hpp"
#include "doctest.h"
#include "oracles/bte_values.hpp"

using namespace bte;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

Complex reduced(Complex k, ModeSpec m) {
  ReducedBte r = bte_reduced(k, m, {}, false);
  return r.value * std::exp(r.log_scale);
}

}  // namespace

TEST_CASE("weight_f") {
  CHECK(weight_f(0.5, 2) == 1.5);
  CHECK(weight_f(1.0, 3) == 4.0);
  // f(t) = 4 t m(2t) with m(r) = (2 + r) / (4 r)
  for (double t : {0.1, 0.3, 0.77, 1.0}) {
    double r = 2 * t;
    CHECK(std::abs(weight_f(t, 2) - 4 * t * (2 + r) / (4 * r)) <= 1e-15);
  }
  CHECK_THROWS_AS(weight_f(1.5, 2), DomainViolation);
  CHECK_THROWS_AS(weight_f(0.5, 4), DomainViolation);
}

TEST_CASE("bte_value at k = 0") {
  CHECK(std::abs(bte_value(0.0, {2, 0}) - 1.5) <= 1e-15);
  CHECK(std::abs(bte_value(0.0, {3, 0}) - 7.0 / 3.0) <= 1e-15);
  CHECK(bte_value(0.0, {2, 4}) == Complex(0.0, 0.0));
  CHECK(bte_value(0.0, {3, 1}) == Complex(0.0, 0.0));
}

TEST_CASE("bte_value against the mpmath table") {
  double worst = 0.0;
  for (const auto& c : oracle::kBte) worst = std::max(worst, rel(bte_value(c.k, {c.d, c.n}), c.b));
  CHECK(worst <= 1e-10);
}

TEST_CASE("reflection symmetries") {
  Complex k(2.0, 1.0);
  Complex b = bte_value(k, {2, 3});
  CHECK(rel(bte_value(-std::conj(k), {2, 3}), std::conj(b)) <= 1e-11);
  CHECK(rel(bte_value(std::conj(k), {2, 3}), std::conj(b)) <= 1e-11);
  for (int d : {2, 3})
    for (int n = 0; n <= 10; n += 5)
      for (Complex w : {Complex(7.0, -2.5), Complex(0.3, 0.9), Complex(15.0, 4.0)}) {
        Complex v = bte_value(w, {d, n});
        CHECK(rel(bte_value(-std::conj(w), {d, n}), std::conj(v)) <= 1e-11);
        CHECK(rel(bte_value(std::conj(w), {d, n}), std::conj(v)) <= 1e-11);
      }
}

TEST_CASE("bte_derivative") {
  CHECK(bte_derivative(0.0, {2, 2}) == Complex(0.0, 0.0));
  Complex k(3.0, 1.0);
  const double h = 1e-5;
  Complex fd = (bte_value(k + h, {2, 2}) - bte_value(k - h, {2, 2})) / (2 * h);
  CHECK(rel(bte_derivative(k, {2, 2}), fd) <= 1e-6);
  Complex fd3 = (bte_value(k + h, {3, 4}) - bte_value(k - h, {3, 4})) / (2 * h);
  CHECK(rel(bte_derivative(k, {3, 4}), fd3) <= 1e-6);
  QuadratureConfig q;
  CHECK(std::abs(bte_derivative(4.5, {2, 0}, q).imag()) <= q.abs_tol);
}

TEST_CASE("reduced form and scaled value agree with the direct value") {
  for (int d : {2, 3})
    for (int n : {0, 3, 12})
      for (Complex k : {Complex(2.0, 1.0), Complex(9.0, -4.0)}) {
        Complex b = bte_value(k, {d, n});
        ScaledComplex s = bte_value_scaled(k, {d, n});
        CHECK(rel(s.value(), b) <= 1e-12);
        ReducedBte r = bte_reduced(k, {d, n}, {}, true);
        Complex p = std::exp(log_bte_prefactor(k, {d, n}));
        CHECK(rel(p * r.value * std::exp(r.log_scale), b) <= 1e-12);
        const double h = 1e-5;
        Complex fd = (reduced(k + h, {d, n}) - reduced(k - h, {d, n})) / (2 * h);
        CHECK(rel(r.derivative * std::exp(r.log_scale), fd) <= 1e-6);
      }
}

TEST_CASE("reduced form at large order stays representable") {
  // B_60(10) is ~1e-80; Bt = (n!)^2 (2/k)^{2n} B_n is O(1).
  ReducedBte r = bte_reduced(10.0, {2, 60}, {}, false);
  CHECK(std::abs(r.value.real() * std::exp(r.log_scale) / oracle::kReducedN60K10 - 1.0) <= 1e-11);
  ScaledComplex s = bte_value_scaled(10.0, {2, 400});
  CHECK(std::isfinite(s.log_abs()));
  CHECK(s.log_abs() < -700.0);
}

TEST_CASE("positivity on the real axis and sign on the imaginary axis") {
  for (int d : {2, 3})
    for (int n = 0; n <= 30; ++n)
      for (double x = 0.5; x <= 60.0; x += 2.5) {
        ReducedBte re = bte_reduced(Complex(x, 0.0), {d, n}, {}, false);
        CHECK(re.value.real() > 0.0);
        // P carries (-1)^n on the imaginary axis, so Bt(ix) > 0 is (-1)^n B_n(ix) > 0
        ReducedBte im = bte_reduced(Complex(0.0, x), {d, n}, {}, false);
        CHECK(im.value.real() > 0.0);
      }
  // direct values where they are representable
  for (int n = 0; n <= 6; ++n) {
    Complex b = bte_value(Complex(0.0, 3.0), {2, n});
    CHECK((n % 2 == 0 ? 1.0 : -1.0) * b.real() > 0.0);
  }
}

TEST_CASE("uniform decay in n on a compact grid") {
  double prev = INFINITY;
  for (int n = 8; n <= 30; ++n) {
    double m = 0.0;
    for (double x = 0.0; x <= 4.0; x += 1.0)
      for (double y = -2.0; y <= 2.0; y += 1.0) m = std::max(m, std::abs(bte_value(Complex(x, y), {2, n})));
    CHECK(m < prev);
    prev = m;
  }
  CHECK(prev < 1e-15);
}

TEST_CASE("halving rel_tol moves the value by less than the error estimate") {
  QuadratureConfig a;
  a.rel_tol = 1e-9;
  QuadratureConfig b = a;
  b.rel_tol = 5e-10;
  for (Complex k : {Complex(12.0, 1.0), Complex(30.0, -3.0)}) {
    ReducedBte ra = bte_reduced(k, {2, 4}, a, false), rb = bte_reduced(k, {2, 4}, b, false);
    CHECK(std::abs(ra.value - rb.value * std::exp(rb.log_scale - ra.log_scale)) <= ra.error);
  }
}

TEST_CASE("mode_truncation_bound") {
  CHECK(mode_truncation_bound({1.0, 1.0, 0.0, 2.0}) == 0);
  int prev = 0;
  for (double K : {5.0, 10.0, 20.0, 40.0}) {
    int n = mode_truncation_bound({0.0, K, -1.0, 1.0});
    CHECK(n >= prev);
    prev = n;
  }
  // no zeros for modes n_max .. 2 n_max on [0,10] x [-3,3]
  ContourBox box{0.0, 10.0, -3.0, 3.0};
  int nmax = mode_truncation_bound(box);
  ZeroFinderConfig zc;
  for (int n = nmax; n <= 2 * nmax; n += std::max(1, nmax / 8))
    CHECK(boundary_winding({2, n}, box, zc).count == 0);
}

TEST_CASE("invalid modes") {
  CHECK_THROWS_AS(bte_value(1.0, {4, 0}), DomainViolation);
  CHECK_THROWS_AS(bte_value(1.0, {2, -1}), DomainViolation);
}
