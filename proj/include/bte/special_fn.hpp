#pragma once

#include <cmath>

#include "bte/errors.hpp"

namespace bte {

enum class EvalMethod { Series, Recurrence, LargeArgument, OlverUniform, TurningPointSeries };

const char* to_string(EvalMethod m);

// V0 = {0 < Re z < 1}, V1 = {Re z > 1}. (BranchDomain is the error type.)
enum class BranchRegion { V0, V1 };
bool in_region(BranchRegion b, Complex z);

// A complex number held as mant * exp(log_scale). Used wherever J_nu(z)
// leaves the double range (large order against moderate argument).
struct ScaledComplex {
  Complex mant{0.0, 0.0};
  double log_scale = 0.0;

  Complex value() const;
  double log_abs() const { return std::log(std::abs(mant)) + log_scale; }
  void normalize();
};

struct BesselEval {
  Complex value;
  EvalMethod method;
};

// Bessel function of the first kind, principal branch, order >= 0.
// Validated to ~1e-11 relative for order <= 2000, |z| <= 4000, |Im z| <= 50.
// Throws OverflowDomain when the result exceeds the double range; the
// overflow threshold is about |Im z| > 700 (or huge order against huge |z|).
Complex bessel_j(double nu, Complex z);
BesselEval bessel_j_diag(double nu, Complex z);
ScaledComplex bessel_j_scaled(double nu, Complex z);

// J'_nu = (J_{nu-1} - J_{nu+1}) / 2; J'_0 = -J_1.
Complex bessel_j_prime(double nu, Complex z);

// j_n(z) = sqrt(pi / (2z)) J_{n+1/2}(z); j_0(0) = 1, j_n(0) = 0.
Complex spherical_j(int n, Complex z);

// S_nu(z) = J_nu(z) Gamma(nu+1) / (z/2)^nu. Entire and even in z, S_nu(0) = 1,
// and never under- or overflows on the validated domain. The pair routine
// returns S_nu and S_{nu+1} from one evaluation.
Complex bessel_j_normalized(double nu, Complex z);
void bessel_j_normalized_pair(double nu, Complex z, Complex& s0, Complex& s1);
ScaledComplex bessel_j_normalized_scaled(double nu, Complex z);
void bessel_j_normalized_pair_scaled(double nu, Complex z, ScaledComplex& s0, ScaledComplex& s1);

struct AiryPair {
  Complex ai;
  Complex aip;
};

// Ai and Ai' together. Relative accuracy ~1e-10 for |z| <= 50, |arg z| <= 2pi/3.
// Throws OverflowDomain when Re(-(2/3) z^{3/2}) > 700 (|z| beyond ~100 in the
// growing sector).
AiryPair airy(Complex z);
Complex airy_ai(Complex z);
Complex airy_ai_prime(Complex z);

// Auxiliary functions of the uniform expansion. Principal branches throughout.
Complex alpha(Complex z);        // ln((1+sqrt(1-z^2))/z) - sqrt(1-z^2)
Complex alpha_tilde(Complex z);  // 1 - sqrt(1-z^2) + ln((1+sqrt(1-z^2))/2)
Complex beta(Complex z);         // sqrt(z^2-1) - arccos(1/z)
Complex zeta(Complex z);
Complex b0(Complex z);

// Two-term uniform (Olver) approximation of J_nu(nu z).
Complex olver_j(double nu, Complex z);
BesselEval olver_j_diag(double nu, Complex z);

enum class AsymMode { Exponential, Oscillatory, LargeArgument, LargeOrder };

// Leading-term approximants: J_nu(nu z)^2 for Exponential/Oscillatory,
// J_nu(z) for LargeArgument/LargeOrder.
Complex asymptotic_j_squared(AsymMode mode, double nu, Complex z);

}  // namespace bte
