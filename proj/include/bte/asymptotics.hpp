#pragma once

#include <vector>

#include "bte/bte_core.hpp"

namespace bte {

struct MellinConfig {
  double c = 0.5;          // contour abscissa, 0 < c < 1
  double y_max = 0.0;      // truncation height; <= 0 picks it automatically
  double quad_tol = 1e-8;  // relative bound on the truncated tail
};

void validate(const MellinConfig& cfg);

// M[phi](1 - z) for phi = chi_(1-eps, 1+eps)(t) / t^{d-2}:
//   d = 2: ((1+eps)^{1-z} - (1-eps)^{1-z}) / (1 - z)
//   d = 3: -((1+eps)^{-z} - (1-eps)^{-z}) / z
// Entire; evaluated through expm1 so the removable point is exact.
Complex mellin_weight(Complex z, double eps, int d);

// M[J_nu^2](z) = 2^{z-1} Gamma(nu+z/2) Gamma(1-z) / (Gamma(1-z/2)^2 Gamma(1+nu-z/2)),
// meromorphic. PoleHit within 1e-12 of a pole (odd positive integers and
// -2nu-2m). At even positive integers the double pole of Gamma(1-z/2)^2
// cancels the pole of Gamma(1-z) and the value is 0.
Complex mellin_j_squared(Complex z, double nu);

struct ContourIntegral {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on the part beyond y_max
  double y_max = 0.0;
};

// I(xi) = int_0^inf phi(t) J_nu(xi t)^2 dt through the Parseval formula on
// Re z = c, truncated at y_max. The tail bound comes from one integration by
// parts per exponential term (valid past the stationary point y ~ 2 xi (1+eps)).
ContourIntegral parseval_integral(double xi, double nu, double eps, int d, const MellinConfig& cfg = {});
Complex parseval_eval(double xi, double nu, double eps, int d, const MellinConfig& cfg = {});

// Direct quadrature of the same integral, for comparison.
double parseval_direct(double xi, double nu, double eps, int d, const QuadratureConfig& cfg = {});

// The limit contour integrals: lim k I_3 (d = 2), lim n k I_3 (d = 3).
ContourIntegral i3_limit_integral(double eps, int d, const MellinConfig& cfg = {});
Complex i3_limit(double eps, int d, const MellinConfig& cfg = {});

// The quantities whose limits i3_limit gives, with f(nu t / k) replaced by
// f(0) = 1 (its n << k limit):
//   d = 2: n int_{1-eps}^{1+eps} J_n(n t)^2 dt
//   d = 3: n nu int j_n(nu t)^2 dt = (pi n / 2) int J_nu(nu t)^2 / t dt,  nu = n + 1/2
double i3_probe(int n, double eps, int d, const QuadratureConfig& cfg = {});

// Predicted B_n(k) for n << |k|: ln(k/n) / (pi k) (d = 2), pi / (4 n k) (d = 3).
Complex k_dominant_prediction(int n, Complex k, int d);
// |k| / n >= 10, below which the prediction is only indicative.
bool k_dominant_in_regime(int n, Complex k);

// lim k B_n(nL), L > 1:
//   d = 2: (1/pi) (sqrt(L^2-1)/L + arccosh L)
//   d = 3: (1/2) int_1^L (t/L+1)^2 / (t sqrt(t^2-1)) dt
double comparable_regime_limit(double L, int d);

// J_inf = 2^{1/3} f(1) int_{2^{1/3} R}^inf Ai^2, the limit of n^{4/3} B_n(k_n)
// (d = 2) and of (2/pi) n^{7/3} B_n(k_n) (d = 3) when n^{2/3}(1 - k_n/n) -> R.
double airy_regime_prediction(double r_inf, int d);

// int_a^inf Ai(x)^2 dx = Ai'(a)^2 - a Ai(a)^2.
double airy_tail_integral(double a);

struct NDominantProbe {
  Complex measured;  // (n!)^2 (2/k)^{2n} B_n(k), i.e. the reduced Bt
  double predicted = 0.0;
};

// n >> |k| regime, n / |k| >= 2. predicted = int_0^1 f t^{2n} exp(-2 nu Re at(k t / nu)) dt
// with at = alpha_tilde; `turning_factor` adds (1 - (k t / nu)^2)^{-1/2}.
NDominantProbe n_dominant_probe(int n, Complex k, int d, bool turning_factor = false,
                                const QuadratureConfig& cfg = {});

struct LogGrowthParts {
  Complex i1;
  double i2 = 0.0;
  Complex i3;
};

// pi k B_n(k) = I1 + I2 + I3 split at t = c / x, x = Re k >= c, d = 2:
//   I1 = pi k int_0^{c/x} f J_n(kt)^2,  I2 = ln x + 1 - c/x - ln c,
//   I3 = int_{c/x}^1 (f/t) (pi k t J_n(kt)^2 - 1) dt.
LogGrowthParts log_growth_decomposition(Complex k, int n, double c, const QuadratureConfig& cfg = {});

// Regime probe bookkeeping for reports.
enum class Regime { NDominant, KDominant, ComparableL, AiryTurning };

struct RegimeSample {
  int n = 0;
  Complex k;
  double measured = 0.0;
  double predicted = 0.0;
  double rel_err() const { return predicted != 0.0 ? std::abs(measured / predicted - 1.0) : INFINITY; }
};

struct RegimeProbe {
  Regime regime = Regime::KDominant;
  double parameter = 0.0;  // L or R_inf where relevant
  int d = 2;
  std::vector<RegimeSample> samples;  // ordered by n, then |k|
  bool monotone() const;              // rel_err nonincreasing along samples
};

// The four doubling sequences used by the verification suite.
RegimeProbe probe_k_dominant(int n, const std::vector<double>& ks, int d, const QuadratureConfig& cfg = {});
RegimeProbe probe_comparable(double L, const std::vector<int>& ns, int d, const QuadratureConfig& cfg = {});
RegimeProbe probe_airy(double r_inf, const std::vector<int>& ns, int d, const QuadratureConfig& cfg = {});
RegimeProbe probe_n_dominant(const std::vector<int>& ns, double k, int d, const QuadratureConfig& cfg = {});

}  // namespace bte
