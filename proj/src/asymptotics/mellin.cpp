#include <cmath>
#include <vector>

#include "bte/asymptotics.hpp"
#include "bte/gamma.hpp"

namespace bte {

namespace {

constexpr double kPi = 3.14159265358979323846;

// (e^w - 1) / w, exact at w = 0.
Complex exprel(Complex w) {
  if (std::abs(w) < 0.5) {
    Complex term = 1.0, sum = 1.0;
    for (int m = 2; m < 40; ++m) {
      term *= w / static_cast<double>(m);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
  }
  return (std::exp(w) - 1.0) / w;
}

// (a^u - b^u) / u with a = 1 + eps, b = 1 - eps.
Complex weight_e(Complex u, double eps) {
  double lb = std::log1p(-eps);
  double len = std::log1p(eps) - lb;  // ln(a/b)
  return std::exp(u * lb) * len * exprel(u * len);
}

bool near_integer(Complex z, long& m) {
  double r = std::round(z.real());
  if (std::abs(z - Complex(r, 0.0)) < 1e-12) {
    m = static_cast<long>(r);
    return true;
  }
  return false;
}

// log(Gamma(s) / Gamma(s + 1/2)), well conditioned for large |s| where the
// two log_gamma values would each be ~|s| log|s| and cancel. Asymptotic
// series (a - b) log s + sum_k (-1)^{k+1} (B_{k+1}(a) - B_{k+1}(b)) / (k (k+1) s^k)
// with a = 0, b = 1/2, after shifting |s| >= 20 by the recurrence.
Complex log_gamma_ratio_half(Complex s) {
  // (B_{k+1}(0) - B_{k+1}(1/2)) / (k (k+1)) for odd k = 1, 3, ..., 15
  static const double kCoef[8] = {
      (1.0 / 6.0) * (2.0 - 0.5) / 2.0,          (-1.0 / 30.0) * (2.0 - 0.125) / 12.0,
      (1.0 / 42.0) * (2.0 - 1.0 / 32.0) / 30.0, (-1.0 / 30.0) * (2.0 - 1.0 / 128.0) / 56.0,
      (5.0 / 66.0) * (2.0 - 1.0 / 512.0) / 90.0, (-691.0 / 2730.0) * (2.0 - 1.0 / 2048.0) / 132.0,
      (7.0 / 6.0) * (2.0 - 1.0 / 8192.0) / 182.0, (-3617.0 / 510.0) * (2.0 - 1.0 / 32768.0) / 240.0};
  Complex shift = 0.0;
  while (std::abs(s) < 20.0) {
    shift += std::log((s + 0.5) / s);
    s += 1.0;
  }
  Complex inv = 1.0 / s, inv2 = inv * inv, p = inv;
  Complex sum = -0.5 * std::log(s);
  for (double c : kCoef) {
    sum += c * p;
    p *= inv2;
  }
  return sum + shift;
}

// log M[J_nu^2](z) by the duplication formula:
//   2^{z-1} Gamma(1-z) / Gamma(1-z/2)^2 = Gamma(1/2 - z/2) / (2 sqrt(pi) Gamma(1 - z/2)).
Complex log_mj2(Complex z, double nu) {
  static const double kLog2SqrtPi = std::log(2.0 * std::sqrt(kPi));
  return log_gamma_ratio_half(0.5 - 0.5 * z) - kLog2SqrtPi + log_gamma(nu + 0.5 * z) -
         log_gamma(1.0 + nu - 0.5 * z);
}

// n^{1-z} M[J_n^2](z) -> 2^{z-1} Gamma(1-z) / Gamma(1-z/2)^2 as n -> inf
Complex log_mj2_limit(Complex z, double) {
  static const double kLog2SqrtPi = std::log(2.0 * std::sqrt(kPi));
  return log_gamma_ratio_half(0.5 - 0.5 * z) - kLog2SqrtPi;
}

using LogG = Complex (*)(Complex, double);

// One component coef * g(z) * q^{-z}, q = exp(logq), of the integrand.
struct Term {
  double coef;
  double logq;
};

struct LineSpec {
  LogG logg;
  double nu;
  int d;  // selects the 1/(1-z) or 1/z factor of M[phi](1-z)
  std::vector<Term> terms;
  double scale;       // value = scale * Re int_0^inf (...) dy
  double stationary;  // beyond this y every term oscillates monotonically faster
};

Complex log_base(const LineSpec& s, Complex z) { return s.logg(z, s.nu) - std::log(s.d == 2 ? 1.0 - z : z); }

double integrand(const LineSpec& s, double c, double y) {
  Complex z(c, y);
  Complex base = log_base(s, z);
  Complex sum = 0.0;
  for (const Term& t : s.terms) sum += t.coef * std::exp(base - z * t.logq);
  return sum.real();
}

Complex wrapped(Complex d) { return {d.real(), std::remainder(d.imag(), 2.0 * kPi)}; }

struct Tail {
  double value = 0.0;
  double bound = INFINITY;
};

// int_Y^inf h dy = -h/L - h L'/L^3 + ..., L = (log h)', per term; the bound
// is the size of the last kept term. Needs Y past the stationary points.
Tail tail_estimate(const LineSpec& s, double c, double y) {
  const double dl = 1e-2;
  Complex b_m = log_base(s, Complex(c, y - dl)), b_0 = log_base(s, Complex(c, y)),
          b_p = log_base(s, Complex(c, y + dl));
  Tail out;
  Complex total = 0.0;
  double bound = 0.0;
  for (const Term& t : s.terms) {
    // log h(y) = base(z) - z logq, z = c + iy
    Complex lm = b_m - Complex(c, y - dl) * t.logq, l0 = b_0 - Complex(c, y) * t.logq,
            lp = b_p - Complex(c, y + dl) * t.logq;
    Complex L = (wrapped(lp - l0) + wrapped(l0 - lm)) / (2.0 * dl);
    Complex Lp = (wrapped(lp - l0) - wrapped(l0 - lm)) / (dl * dl);
    if (std::abs(L) < 1e-2 || std::abs(Lp) > 0.5 * std::norm(L)) return out;
    Complex h = t.coef * std::exp(l0);
    total += -h / L - h * Lp / (L * L * L);
    bound += std::abs(h * Lp / (L * L * L));
  }
  out.value = s.scale * total.real();
  out.bound = std::abs(s.scale) * bound;
  return out;
}

double max_rate(const LineSpec& s, double c, double y) {
  const double h = 1e-2;
  Complex b0 = log_base(s, Complex(c, y)), b1 = log_base(s, Complex(c, y + h));
  double dtheta = std::remainder(b1.imag() - b0.imag(), 2.0 * kPi) / h;
  double r = 0.0;
  for (const Term& t : s.terms) r = std::max(r, std::abs(dtheta - t.logq));
  return r;
}

ContourIntegral line_integral(const LineSpec& s, const MellinConfig& cfg) {
  validate(cfg);
  const double c = cfg.c;
  const bool automatic = !(cfg.y_max > 0.0);
  double y = automatic ? std::max(32.0, 4.0 * s.stationary) : cfg.y_max;
  auto f = [&](double yy) { return Complex(integrand(s, c, yy), 0.0); };

  QuadratureConfig q;
  q.rel_tol = 1e-12;
  q.abs_tol = 1e-300;
  q.max_panels = 1 << 22;
  double lo = 0.0;
  long double acc = 0.0L;
  for (;;) {
    double rate = std::max(max_rate(s, c, lo), max_rate(s, c, y));
    // later pieces are small; judge them against the running total
    if (lo > 0.0) q.abs_tol = std::max(1e-300, 1e-13 * std::abs(static_cast<double>(acc)));
    acc += integrate_gk(f, lo, y, q, rate).value.real();
    Tail tail = tail_estimate(s, c, y);
    double value = s.scale * static_cast<double>(acc) + tail.value;
    if (tail.bound <= cfg.quad_tol * std::abs(value)) return {value, tail.bound, y};
    if (!automatic || y > 1e8)
      throw TruncationInsufficient("Mellin contour: tail bound " + std::to_string(tail.bound) + " at y_max " +
                                   std::to_string(y) + " exceeds quad_tol");
    lo = y;
    y *= 2.0;
  }
}

}  // namespace

void validate(const MellinConfig& cfg) {
  if (!(cfg.c > 0.0 && cfg.c < 1.0)) throw DomainViolation("MellinConfig: c must lie in (0, 1)");
  if (!(cfg.quad_tol > 0.0)) throw DomainViolation("MellinConfig: quad_tol must be > 0");
}

Complex mellin_weight(Complex z, double eps, int d) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainViolation("mellin_weight: eps must lie in (0, 1)");
  if (d == 2) return weight_e(1.0 - z, eps);
  if (d == 3) return weight_e(-z, eps);
  throw DomainViolation("mellin_weight: d must be 2 or 3");
}

Complex mellin_j_squared(Complex z, double nu) {
  if (!(nu >= 0.0)) throw DomainViolation("mellin_j_squared: nu must be >= 0");
  long m = 0;
  if (near_integer(z, m) && m >= 1) {
    if (m % 2 == 1) throw PoleHit("mellin_j_squared: pole of Gamma(1 - z)");
    return 0.0;
  }
  Complex w = nu + 0.5 * z;
  if (near_integer(w, m) && m <= 0) throw PoleHit("mellin_j_squared: pole of Gamma(nu + z/2)");
  if (near_integer(1.0 + nu - 0.5 * z, m) && m <= 0) return 0.0;
  return std::exp(log_mj2(z, nu));
}

ContourIntegral parseval_integral(double xi, double nu, double eps, int d, const MellinConfig& cfg) {
  if (!(xi > 0.0)) throw DomainViolation("parseval_eval: xi must be > 0");
  if (!(nu >= 0.0)) throw DomainViolation("parseval_eval: nu must be >= 0");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainViolation("parseval_eval: eps must lie in (0, 1)");
  if (d != 2 && d != 3) throw DomainViolation("parseval_eval: d must be 2 or 3");
  double a = 1.0 + eps, b = 1.0 - eps;
  LineSpec s;
  s.logg = log_mj2;
  s.nu = nu;
  s.d = d;
  // xi^{-z} M[phi](1-z) as a sum of q^{-z} terms
  if (d == 2)
    s.terms = {{a, std::log(xi * a)}, {-b, std::log(xi * b)}};
  else
    s.terms = {{-1.0, std::log(xi * a)}, {1.0, std::log(xi * b)}};
  s.scale = 1.0 / kPi;
  s.stationary = 2.0 * xi * a + nu;
  return line_integral(s, cfg);
}

Complex parseval_eval(double xi, double nu, double eps, int d, const MellinConfig& cfg) {
  return parseval_integral(xi, nu, eps, d, cfg).value;
}

double parseval_direct(double xi, double nu, double eps, int d, const QuadratureConfig& cfg) {
  if (d != 2 && d != 3) throw DomainViolation("parseval_direct: d must be 2 or 3");
  auto f = [&](double t) {
    Complex j = bessel_j(nu, Complex(xi * t, 0.0));
    double v = j.real() * j.real();
    return Complex(d == 2 ? v : v / t, 0.0);
  };
  return integrate_gk(f, 1.0 - eps, 1.0 + eps, cfg, xi).value.real();
}

ContourIntegral i3_limit_integral(double eps, int d, const MellinConfig& cfg) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainViolation("i3_limit: eps must lie in (0, 1)");
  if (d != 2 && d != 3) throw DomainViolation("i3_limit: d must be 2 or 3");
  double a = 1.0 + eps, b = 1.0 - eps;
  LineSpec s;
  s.logg = log_mj2_limit;
  s.nu = 0.0;
  s.d = d;
  if (d == 2) {
    // (1/2 pi i) int ... [(a^{1-z} - b^{1-z}) / (1-z)] dz
    s.terms = {{a, std::log(a)}, {-b, std::log(b)}};
    s.scale = 1.0 / kPi;
  } else {
    // -(1/4i) int ... [(a^{-z} - b^{-z}) / z] dz
    s.terms = {{1.0, std::log(a)}, {-1.0, std::log(b)}};
    s.scale = -0.5;
  }
  s.stationary = 0.0;
  return line_integral(s, cfg);
}

Complex i3_limit(double eps, int d, const MellinConfig& cfg) { return i3_limit_integral(eps, d, cfg).value; }

double i3_probe(int n, double eps, int d, const QuadratureConfig& cfg) {
  if (n < 1) throw DomainViolation("i3_probe: n must be >= 1");
  if (d != 2 && d != 3) throw DomainViolation("i3_probe: d must be 2 or 3");
  double nu = d == 2 ? n : n + 0.5;
  auto f = [&](double t) {
    Complex j = bessel_j(nu, Complex(nu * t, 0.0));
    double v = j.real() * j.real();
    return Complex(d == 2 ? v : v / t, 0.0);
  };
  double integral = integrate_gk(f, 1.0 - eps, 1.0 + eps, cfg, nu).value.real();
  return d == 2 ? n * integral : 0.5 * kPi * n * integral;
}

}  // namespace bte
