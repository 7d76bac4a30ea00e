#pragma once

#include "bte/errors.hpp"
#include "bte/quadrature.hpp"
#include "bte/special_fn.hpp"

namespace bte {

struct ModeSpec {
  int d = 2;  // 2 or 3
  int n = 0;  // angular index >= 0
};

void validate(const ModeSpec& m);

// Axis-aligned rectangle in the complex k-plane.
struct ContourBox {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;

  bool empty() const { return !(re_min < re_max) || !(im_min < im_max); }
  double diagonal() const;
  double max_modulus() const;
};

// f(t) = t + 1 (d = 2) or (t + 1)^2 (d = 3).
double weight_f(double t, int d);

// B_n(k) = int_0^1 f(t) J_n(kt)^2 dt (d = 2), int_0^1 f(t) j_n(kt)^2 dt (d = 3).
Complex bte_value(Complex k, ModeSpec mode, const QuadratureConfig& cfg = {});
Complex bte_derivative(Complex k, ModeSpec mode, const QuadratureConfig& cfg = {});

// B_n(k) in log form; stays representable when B_n under- or overflows.
ScaledComplex bte_value_scaled(Complex k, ModeSpec mode, const QuadratureConfig& cfg = {});

// B_n = P * Bt with P = c_d^2 (k^2/4)^n, c_2 = 1/n!, c_3 = sqrt(pi)/(2 Gamma(n+3/2)), and
//   Bt(k) = int_0^1 f(t) t^{2n} S_nu(kt)^2 dt,   S_nu = J_nu Gamma(nu+1) / (z/2)^nu,
// nu = n (d = 2) or n + 1/2 (d = 3). Bt is entire, Bt(0) > 0, and has the same
// zeros as B_n away from k = 0. The zero finder works with Bt.
// All fields carry the common factor exp(-log_scale): Bt = value * exp(log_scale).
struct ReducedBte {
  Complex value;
  Complex derivative;  // filled only when requested
  double l1 = 0.0;     // int f t^{2n} |S|^2, so |value| / l1 is a scale-free residual
  double error = 0.0;
  double log_scale = 0.0;
};

ReducedBte bte_reduced(Complex k, ModeSpec mode, const QuadratureConfig& cfg, bool with_derivative);

// log P (real part is log|P|).
Complex log_bte_prefactor(Complex k, ModeSpec mode);

// Least n_max such that for every n >= n_max and k in the box the leading
// series term of Bt dominates the remainder, hence B_n has no zero in the box.
// From |S_nu(z) - 1| <= e^q - 1 with q = |z|^2 / (4(nu+1)): the remainder is at
// most (e^{2q} - 1) times the leading term, which is < 1 once
// nu + 1 > K^2 / (2 ln 2), K = max |k| on the box.
int mode_truncation_bound(const ContourBox& box, const QuadratureConfig& cfg = {}, int d = 2);

}  // namespace bte
