#include <algorithm>
#include <cmath>

#include "bte/zero_finder.hpp"
#include "zero_finder/sampler.hpp"

namespace bte {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap(double a) { return std::remainder(a, 2.0 * kPi); }

// Lattice multiples of h strictly inside (a, b), plus both ends, in the
// direction a -> b.
std::vector<double> edge_params(double a, double b, double h) {
  std::vector<double> u{a};
  double lo = std::min(a, b), hi = std::max(a, b);
  double j0 = std::floor(lo / h) + 1.0, j1 = std::ceil(hi / h) - 1.0;
  std::vector<double> inner;
  for (double j = j0; j <= j1; j += 1.0) inner.push_back(j * h);
  if (a > b) std::reverse(inner.begin(), inner.end());
  u.insert(u.end(), inner.begin(), inner.end());
  u.push_back(b);
  return u;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  auto mid = v.begin() + v.size() / 2;
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

ContourBox grown(const ContourBox& b, double by) {
  // Edges on the axes stay put: B_n has no zeros there.
  ContourBox g = b;
  if (b.re_min != 0.0) g.re_min -= by;
  g.re_max += by;
  if (b.im_min != 0.0) g.im_min -= by;
  if (b.im_max != 0.0) g.im_max += by;
  return g;
}

}  // namespace

namespace detail {

PhaseSampler::PhaseSampler(ModeSpec mode, const ZeroFinderConfig& cfg, const ContourBox& root)
    : mode_(mode), cfg_(cfg) {
  validate(mode);
  // Between zeros the phase of Bt turns at about 2 |t| per unit length (from
  // the e^{+-2ikt} content of J^2) for n below |k|, and much slower once the
  // order dominates. Lattice spacing keeps that drift near pi/8 per step.
  double nu = mode.d == 2 ? mode.n : mode.n + 0.5;
  double rate = 2.0 * std::min(1.0, (root.max_modulus() + 1.0) / (nu + 1.0));
  double h0 = std::min(4.0, kPi / 8.0 / rate);
  lattice_ = std::exp2(std::floor(std::log2(h0)));
}

PhaseSample PhaseSampler::at(Complex k) {
  auto key = std::make_pair(std::llround(k.real() * 4294967296.0), std::llround(k.imag() * 4294967296.0));
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  ReducedBte r = bte_reduced(k, mode_, cfg_.quad, false);
  PhaseSample s;
  s.rho = r.l1 > 0.0 ? std::abs(r.value) / r.l1 : 0.0;
  s.phase = std::arg(r.value);
  cache_.emplace(key, s);
  return s;
}

WindingResult winding_with(PhaseSampler& sp, const ContourBox& box, const ZeroFinderConfig& cfg) {
  if (box.empty()) throw DomainViolation("boundary_winding: empty box");
  const double h = sp.lattice();
  const double min_step = 1e-10 * box.diagonal();
  double total = 0.0;
  std::vector<double> rhos;
  int samples = 0;

  struct Edge {
    bool horizontal;
    double fixed, a, b;
  };
  const Edge edges[4] = {{true, box.im_min, box.re_min, box.re_max},
                         {false, box.re_max, box.im_min, box.im_max},
                         {true, box.im_max, box.re_max, box.re_min},
                         {false, box.re_min, box.im_max, box.im_min}};
  for (const Edge& e : edges) {
    auto point = [&](double u) { return e.horizontal ? Complex(u, e.fixed) : Complex(e.fixed, u); };
    auto sample = [&](double u) {
      PhaseSample s = sp.at(point(u));
      ++samples;
      rhos.push_back(s.rho);
      if (!(s.rho > 0.0)) throw BoundaryTooClose("boundary_winding: Bt vanishes on the boundary");
      return s;
    };
    std::vector<double> us = edge_params(e.a, e.b, h);
    PhaseSample prev = sample(us[0]);
    for (std::size_t i = 1; i < us.size(); ++i) {
      // Bisect [us[i-1], us[i]] until every increment is below phase_step.
      std::vector<std::pair<double, PhaseSample>> todo;  // right ends, stack
      double u0 = us[i - 1];
      PhaseSample s0 = prev;
      double u1 = us[i];
      PhaseSample s1 = sample(u1);
      PhaseSample end = s1;
      for (;;) {
        double dphi = wrap(s1.phase - s0.phase);
        if (std::abs(dphi) < cfg.phase_step) {
          total += dphi;
          if (todo.empty()) break;
          u0 = u1;
          s0 = s1;
          u1 = todo.back().first;
          s1 = todo.back().second;
          todo.pop_back();
          continue;
        }
        if (std::abs(u1 - u0) < min_step) throw BoundaryTooClose("boundary_winding: phase jump unresolved");
        todo.emplace_back(u1, s1);
        u1 = 0.5 * (u0 + u1);
        s1 = sample(u1);
      }
      prev = end;
    }
  }

  double turns = total / (2.0 * kPi);
  WindingResult w;
  w.count = static_cast<int>(std::lround(turns));
  w.phase_residual = std::abs(turns - w.count);
  w.boundary_min_modulus = *std::min_element(rhos.begin(), rhos.end());
  w.samples = samples;
  if (w.boundary_min_modulus < cfg.proximity * median_of(rhos))
    throw BoundaryTooClose("boundary_winding: zero within the proximity threshold of the boundary");
  if (w.count < 0 || w.phase_residual > 1e-3)
    throw BoundaryTooClose("boundary_winding: inconsistent phase total");
  return w;
}

}  // namespace detail

WindingResult boundary_winding(ModeSpec mode, const ContourBox& box, const ZeroFinderConfig& cfg) {
  detail::PhaseSampler sp(mode, cfg, box);
  return detail::winding_with(sp, box, cfg);
}

std::vector<IsolatedCell> isolate_zero_cells(ModeSpec mode, const ContourBox& box, double cell_size,
                                             const ZeroFinderConfig& cfg) {
  if (!(cell_size > 0.0)) throw DomainViolation("isolate_zeros: cell_size must be > 0");
  detail::PhaseSampler sp(mode, cfg, box);
  const double jit = cfg.jitter * box.diagonal();

  IsolatedCell root{box, 0};
  for (int attempt = 0;; ++attempt) {
    try {
      root.box = attempt == 0 ? box : grown(box, attempt * jit);
      root.count = detail::winding_with(sp, root.box, cfg).count;
      break;
    } catch (const BoundaryTooClose&) {
      if (attempt >= cfg.max_retries) throw;
    }
  }

  std::vector<IsolatedCell> out;
  std::vector<IsolatedCell> stack;
  if (root.count > 0) stack.push_back(root);
  static const double kOffsets[] = {0.0, 1.0, -1.0, 2.0, -2.0, 3.0};
  while (!stack.empty()) {
    IsolatedCell c = stack.back();
    stack.pop_back();
    if (c.box.diagonal() <= cell_size) {
      out.push_back(c);
      continue;
    }
    const bool vertical_cut = (c.box.re_max - c.box.re_min) >= (c.box.im_max - c.box.im_min);
    const double cjit = cfg.jitter * c.box.diagonal();
    bool done = false;
    for (int attempt = 0; attempt <= cfg.max_retries && attempt < 6 && !done; ++attempt) {
      ContourBox lo = c.box, hi = c.box;
      if (vertical_cut) {
        double x = 0.5 * (c.box.re_min + c.box.re_max) + kOffsets[attempt] * cjit;
        lo.re_max = hi.re_min = x;
      } else {
        double y = 0.5 * (c.box.im_min + c.box.im_max) + kOffsets[attempt] * cjit;
        lo.im_max = hi.im_min = y;
      }
      try {
        int nlo = detail::winding_with(sp, lo, cfg).count;
        int nhi = detail::winding_with(sp, hi, cfg).count;
        if (nlo + nhi != c.count) continue;
        // push hi first so the low half is processed first (stable order)
        if (nhi > 0) stack.push_back({hi, nhi});
        if (nlo > 0) stack.push_back({lo, nlo});
        done = true;
      } catch (const BoundaryTooClose&) {
      }
    }
    if (!done) throw BoundaryTooClose("isolate_zeros: could not split a cell after jitter retries");
  }
  return out;
}

std::vector<ContourBox> isolate_zeros(ModeSpec mode, const ContourBox& box, double cell_size,
                                      const ZeroFinderConfig& cfg) {
  std::vector<ContourBox> boxes;
  for (const auto& c : isolate_zero_cells(mode, box, cell_size, cfg)) boxes.push_back(c.box);
  return boxes;
}

EigenvalueRecord newton_refine(ModeSpec mode, Complex k0, double tol, const ZeroFinderConfig& cfg,
                               const std::optional<ContourBox>& seed_box, int multiplicity) {
  validate(mode);
  if (!(tol > 0.0)) throw DomainViolation("newton_refine: tol must be > 0");
  ContourBox limit;
  if (seed_box) {
    double cx = 0.5 * (seed_box->re_min + seed_box->re_max), cy = 0.5 * (seed_box->im_min + seed_box->im_max);
    double hx = seed_box->re_max - seed_box->re_min, hy = seed_box->im_max - seed_box->im_min;
    limit = {cx - hx, cx + hx, cy - hy, cy + hy};
  }
  Complex k = k0;
  for (int it = 0; it <= cfg.max_newton; ++it) {
    ReducedBte r = bte_reduced(k, mode, cfg.quad, true);
    double rho = r.l1 > 0.0 ? std::abs(r.value) / r.l1 : 0.0;
    if (rho <= tol) {
      EigenvalueRecord rec;
      rec.mode = mode;
      rec.k = k;
      rec.residual = rho;
      rec.multiplicity = multiplicity;
      rec.newton_iters = it;
      return rec;
    }
    if (it == cfg.max_newton) break;
    if (std::abs(r.derivative) == 0.0) throw NoConvergence("newton_refine: zero derivative");
    k -= static_cast<double>(multiplicity) * r.value / r.derivative;
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) throw NoConvergence("newton_refine: iterate not finite");
    if (seed_box && (k.real() < limit.re_min || k.real() > limit.re_max || k.imag() < limit.im_min ||
                     k.imag() > limit.im_max))
      throw NoConvergence("newton_refine: iterate left twice the seed box");
  }
  throw NoConvergence("newton_refine: no convergence in " + std::to_string(cfg.max_newton) + " iterations");
}

}  // namespace bte
