#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "bte/errors.hpp"

namespace bte {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_panels = 4096;
  double oscillation_split = 1.5707963267948966;  // pi/2 in units of k t
};

struct QuadResult {
  Complex value;
  double error = 0.0;  // sum of |K15 - G7| over panels
  double l1 = 0.0;     // Kronrod estimate of the integral of |f|
  int panels = 0;
};

void validate(const QuadratureConfig& cfg);

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK qk15).
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  double l1;
  bool operator<(const Panel& o) const {
    if (error != o.error) return error < o.error;
    return a > o.a;  // deterministic tie-break
  }
};

template <class F>
Panel gk15(F& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex rk = fc * kWgk[7];
  Complex rg = fc * kWg[3];
  double l1 = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    Complex f1 = f(c - dx), f2 = f(c + dx);
    rk += kWgk[j] * (f1 + f2);
    l1 += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) rg += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, rk * h, std::abs((rk - rg) * h), l1 * std::abs(h)};
}

}  // namespace detail

// Adaptive G7K15 quadrature of a complex integrand on [a, b]. The interval
// starts split into panels of width at most oscillation_split / freq (freq is
// the oscillation rate of the integrand, |Re k| for J(kt)^2), then the panel
// with the largest error is bisected until
//   error <= max(abs_tol, rel_tol * integral of |f|).
// The tolerance is measured against the L1 norm rather than |value| because
// near a zero of B_n the value itself goes to zero.
template <class F>
QuadResult integrate_gk(F&& f, double a, double b, const QuadratureConfig& cfg, double freq = 0.0) {
  QuadResult out;
  if (a == b) return out;
  double len = b - a;
  long n0 = 1;
  if (freq > 0.0) n0 = std::max(1L, static_cast<long>(std::ceil(std::abs(len) * freq / cfg.oscillation_split)));
  if (n0 > cfg.max_panels)
    throw QuadratureFailure("quadrature: " + std::to_string(n0) + " initial panels exceed max_panels");

  std::priority_queue<detail::Panel> heap;
  long double err = 0.0L, l1 = 0.0L;
  for (long i = 0; i < n0; ++i) {
    double pa = a + len * static_cast<double>(i) / n0;
    double pb = (i + 1 == n0) ? b : a + len * static_cast<double>(i + 1) / n0;
    detail::Panel p = detail::gk15(f, pa, pb);
    err += p.error;
    l1 += p.l1;
    heap.push(p);
  }
  long count = n0;
  while (static_cast<double>(err) > std::max(cfg.abs_tol, cfg.rel_tol * static_cast<double>(l1))) {
    if (count >= cfg.max_panels)
      throw QuadratureFailure("quadrature: tolerance not met within max_panels (error " +
                              std::to_string(static_cast<double>(err)) + ")");
    detail::Panel p = heap.top();
    heap.pop();
    double m = 0.5 * (p.a + p.b);
    detail::Panel left = detail::gk15(f, p.a, m);
    detail::Panel right = detail::gk15(f, m, p.b);
    err += static_cast<long double>(left.error) + right.error - p.error;
    l1 += static_cast<long double>(left.l1) + right.l1 - p.l1;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Re-sum in a fixed order so the result does not depend on heap history.
  std::vector<detail::Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
  std::complex<long double> v = 0.0L;
  long double e = 0.0L, s = 0.0L;
  for (const auto& p : all) {
    v += std::complex<long double>(p.value.real(), p.value.imag());
    e += p.error;
    s += p.l1;
  }
  out.value = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  out.error = static_cast<double>(e);
  out.l1 = static_cast<double>(s);
  out.panels = static_cast<int>(count);
  return out;
}

}  // namespace bte
