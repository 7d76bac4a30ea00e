#include "bte/bte_core.hpp"

#include <algorithm>
#include <cmath>

namespace bte {

namespace {

constexpr double kPi = 3.14159265358979323846;

double lgamma_pos(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double order_of(ModeSpec m) { return m.d == 2 ? m.n : m.n + 0.5; }

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) throw DomainViolation("quadrature tolerances must be > 0");
  if (cfg.max_panels < 1) throw DomainViolation("max_panels must be >= 1");
  if (!(cfg.oscillation_split > 0.0)) throw DomainViolation("oscillation_split must be > 0");
}

void validate(const ModeSpec& m) {
  if (m.d != 2 && m.d != 3) throw DomainViolation("mode dimension must be 2 or 3");
  if (m.n < 0) throw DomainViolation("mode index must be >= 0");
}

double ContourBox::diagonal() const { return std::hypot(re_max - re_min, im_max - im_min); }

double ContourBox::max_modulus() const {
  double x = std::max(std::abs(re_min), std::abs(re_max));
  double y = std::max(std::abs(im_min), std::abs(im_max));
  return std::hypot(x, y);
}

double weight_f(double t, int d) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainViolation("weight_f: t outside [0, 1]");
  if (d == 2) return t + 1.0;
  if (d == 3) return (t + 1.0) * (t + 1.0);
  throw DomainViolation("weight_f: d must be 2 or 3");
}

Complex log_bte_prefactor(Complex k, ModeSpec mode) {
  validate(mode);
  double logc = (mode.d == 2) ? -lgamma_pos(mode.n + 1.0)
                              : 0.5 * std::log(kPi) - std::log(2.0) - lgamma_pos(mode.n + 1.5);
  if (mode.n == 0) return 2.0 * logc;
  if (k == Complex(0.0, 0.0)) return {-INFINITY, 0.0};
  // (k^2/4)^n rather than (k/2)^{2n}: exact under k -> -conj(k).
  return 2.0 * logc + static_cast<double>(mode.n) * std::log(k * k / 4.0);
}

ReducedBte bte_reduced(Complex k, ModeSpec mode, const QuadratureConfig& cfg, bool with_derivative) {
  validate(mode);
  validate(cfg);
  const double nu = order_of(mode);
  const int d = mode.d;
  const double two_n = 2.0 * mode.n;
  const double freq = std::abs(k.real());
  ReducedBte r;

  // log|f t^{2n} S(kt)^2| at t, the real part of the log-integrand.
  auto log_mag = [&](double t) -> double {
    ScaledComplex s = bessel_j_normalized_scaled(nu, k * t);
    if (s.mant == Complex(0.0, 0.0)) return -INFINITY;
    return std::log(weight_f(t, d)) + two_n * std::log(t) + 2.0 * s.log_abs();
  };
  // Shift so the integrand is O(1) somewhere; keeps Bt representable when it
  // is far outside the double range (large n against large |k|).
  double sigma = -INFINITY;
  for (double t : {1.0, 0.75, 0.5, 0.25}) sigma = std::max(sigma, log_mag(t));
  if (!std::isfinite(sigma)) sigma = 0.0;
  r.log_scale = sigma;

  auto value_integrand = [&](double t) -> Complex {
    ScaledComplex s = bessel_j_normalized_scaled(nu, k * t);
    if (s.mant == Complex(0.0, 0.0)) return 0.0;
    double e = two_n * std::log(t) + 2.0 * s.log_scale - sigma;
    if (e < -745.0) return 0.0;
    return weight_f(t, d) * std::exp(e) * s.mant * s.mant;
  };
  QuadResult q = integrate_gk(value_integrand, 0.0, 1.0, cfg, freq);
  r.value = q.value;
  r.l1 = q.l1;
  r.error = q.error;

  if (with_derivative) {
    // d/dk S_nu(kt)^2 = 2 S S' t, with S'_nu(z) = -z S_{nu+1}(z) / (2(nu+1)).
    auto deriv_integrand = [&](double t) -> Complex {
      ScaledComplex s0, s1;
      bessel_j_normalized_pair_scaled(nu, k * t, s0, s1);
      if (s0.mant == Complex(0.0, 0.0) || s1.mant == Complex(0.0, 0.0)) return 0.0;
      double e = (two_n + 2.0) * std::log(t) + s0.log_scale + s1.log_scale - sigma;
      if (e < -745.0) return 0.0;
      return weight_f(t, d) * std::exp(e) * s0.mant * s1.mant;
    };
    QuadResult qd = integrate_gk(deriv_integrand, 0.0, 1.0, cfg, freq);
    r.derivative = -k / (nu + 1.0) * qd.value;
  }
  return r;
}

ScaledComplex bte_value_scaled(Complex k, ModeSpec mode, const QuadratureConfig& cfg) {
  ReducedBte r = bte_reduced(k, mode, cfg, false);
  Complex lp = log_bte_prefactor(k, mode);
  ScaledComplex out;
  if (!std::isfinite(lp.real())) return out;  // k = 0, n >= 1
  out.mant = r.value * std::polar(1.0, lp.imag());
  out.log_scale = lp.real() + r.log_scale;
  out.normalize();
  return out;
}

Complex bte_value(Complex k, ModeSpec mode, const QuadratureConfig& cfg) {
  ScaledComplex s = bte_value_scaled(k, mode, cfg);
  if (s.mant == Complex(0.0, 0.0)) return 0.0;
  if (s.log_abs() < -745.0) return 0.0;  // below the smallest subnormal
  return s.value();
}

Complex bte_derivative(Complex k, ModeSpec mode, const QuadratureConfig& cfg) {
  validate(mode);
  if (k == Complex(0.0, 0.0)) {
    // B_0'(0) = 0 by evenness; B_n'(0) = 0 for n >= 1.
    return 0.0;
  }
  ReducedBte r = bte_reduced(k, mode, cfg, true);
  // B = P Bt, P'/P = 2n/k.
  Complex lp = log_bte_prefactor(k, mode);
  Complex inner = 2.0 * mode.n / k * r.value + r.derivative;
  if (inner == Complex(0.0, 0.0)) return 0.0;
  Complex e = lp + r.log_scale + std::log(inner);
  if (e.real() < -745.0) return 0.0;
  if (e.real() > 709.0) throw OverflowDomain("bte_derivative: value exceeds double range");
  return std::exp(e);
}

int mode_truncation_bound(const ContourBox& box, const QuadratureConfig& cfg, int d) {
  validate(cfg);
  if (d != 2 && d != 3) throw DomainViolation("mode_truncation_bound: d must be 2 or 3");
  if (box.empty()) return 0;
  double k2 = box.max_modulus() * box.max_modulus();
  double shift = (d == 2) ? 1.0 : 1.5;  // nu + 1 = n + shift
  // least integer n with n + shift > K^2 / (2 ln 2)
  double need = k2 / (2.0 * std::log(2.0)) - shift;
  int n = static_cast<int>(std::floor(need)) + 1;
  return std::max(n, 0);
}

}  // namespace bte
