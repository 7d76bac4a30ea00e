#include <cmath>
#include <complex>

#include "bte/special_fn.hpp"
#include "turning_point_coeffs.hpp"

namespace bte {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTurningRadius = 0.2;   // |z - 1| below this uses the Taylor series
constexpr double kB0SeriesRadius = 0.05; // |zeta| below this uses the b0 series
constexpr double kSectorDelta = 0.2;     // olver_j needs |arg z| <= pi - delta

// Adding +0.0 turns a negative zero imaginary part into +0, so values on a
// cut take the principal (upper) side, matching the textbook convention.
Complex unsign(Complex z) { return {z.real(), z.imag() + 0.0}; }
Complex psqrt(Complex z) { return std::sqrt(unsign(z)); }
Complex plog(Complex z) { return std::log(unsign(z)); }
Complex ppow(Complex z, double p) {
  if (z == Complex(0.0, 0.0)) return 0.0;
  return std::exp(p * plog(z));
}

template <std::size_t N>
Complex horner(const double (&c)[N], Complex w) {
  Complex acc = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * w + c[i];
  return acc;
}

// log(1+x) without cancellation for small x (Kahan's trick).
Complex log1p_c(Complex x) {
  Complex u = 1.0 + x;
  if (u == Complex(1.0, 0.0)) return x;
  return plog(u) * x / (u - 1.0);
}

Complex alpha_any(Complex z) {
  Complex w = 1.0 - z;
  if (std::abs(w) < kTurningRadius) return w * psqrt(w) * horner(detail::kAlphaH, w);
  Complex s = psqrt(1.0 - z * z);
  return plog((1.0 + s) / z) - s;
}

Complex beta_any(Complex z) {
  Complex v = z - 1.0;
  if (std::abs(v) < kTurningRadius) return v * psqrt(v) * horner(detail::kAlphaH, -v);
  return psqrt(z * z - 1.0) - std::acos(unsign(1.0 / z));
}

Complex zeta_any(Complex z, bool* series) {
  Complex w = 1.0 - z;
  bool s = std::abs(w) < kTurningRadius;
  if (series) *series = s;
  if (s) return w * horner(detail::kZetaG, w);
  if (z.real() <= 1.0) return ppow(1.5 * alpha_any(z), 2.0 / 3.0);
  return -ppow(1.5 * beta_any(z), 2.0 / 3.0);
}

Complex b0_from(Complex z, Complex ze) {
  if (std::abs(ze) < kB0SeriesRadius) return horner(detail::kB0Series, 1.0 - z);
  Complex lead = -5.0 / (48.0 * ze * ze);
  if (z.real() <= 1.0) {
    Complex u = 1.0 - z * z;
    Complex su = psqrt(u);
    return lead + (5.0 / (24.0 * u * su) - 1.0 / (8.0 * su)) / psqrt(ze);
  }
  Complex u = z * z - 1.0;
  Complex su = psqrt(u);
  return lead + (5.0 / (24.0 * u * su) + 1.0 / (8.0 * su)) / psqrt(-ze);
}

void require_sector(Complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainViolation(std::string(who) + ": non-finite argument");
  if (z == Complex(0.0, 0.0) || (z.imag() == 0.0 && z.real() < 0.0))
    throw DomainViolation(std::string(who) + ": argument on the cut (-inf, 0]");
}

void require_right(Complex z, const char* who) {
  if (!(z.real() > 0.0)) throw DomainViolation(std::string(who) + ": needs Re z > 0");
}

}  // namespace

Complex alpha(Complex z) {
  require_right(z, "alpha");
  if (z.imag() == 0.0 && z.real() > 1.0) throw BranchDomain("alpha: z on the cut (1, inf)");
  return alpha_any(z);
}

Complex alpha_tilde(Complex z) {
  require_right(z, "alpha_tilde");
  if (z.imag() == 0.0 && z.real() > 1.0) throw BranchDomain("alpha_tilde: z on the cut (1, inf)");
  Complex s = psqrt(1.0 - z * z);
  Complex u = z * z / (1.0 + s);  // 1 - s without cancellation
  return u + log1p_c(-0.5 * u);
}

Complex beta(Complex z) {
  require_right(z, "beta");
  if (z.imag() == 0.0 && z.real() < 1.0) throw BranchDomain("beta: z on the cut (0, 1)");
  return beta_any(z);
}

// zeta and b0 accept the whole cut plane (the uniform expansion is used for
// |arg z| <= pi - delta); the closed forms below are continuous there.
Complex zeta(Complex z) {
  require_sector(z, "zeta");
  return zeta_any(z, nullptr);
}

Complex b0(Complex z) {
  require_sector(z, "b0");
  return b0_from(z, zeta_any(z, nullptr));
}

BesselEval olver_j_diag(double nu, Complex z) {
  if (!(nu >= 1.0)) throw DomainViolation("olver_j: needs nu >= 1");
  require_sector(z, "olver_j");
  if (std::abs(std::arg(z)) > kPi - kSectorDelta) throw DomainViolation("olver_j: |arg z| > pi - 0.2");
  bool series = false;
  Complex ze = zeta_any(z, &series);
  Complex pre;
  if (series) {
    // 4 zeta / (1 - z^2) = 4 G(w) / (2 - w), free of the removable 0/0.
    Complex w = 1.0 - z;
    pre = ppow(4.0 * horner(detail::kZetaG, w) / (2.0 - w), 0.25);
  } else {
    pre = ppow(4.0 * ze / (1.0 - z * z), 0.25);
  }
  double n13 = std::cbrt(nu);
  AiryPair a = airy(n13 * n13 * ze);
  Complex v = pre * (a.ai / n13 + b0_from(z, ze) * a.aip / (nu * n13 * n13));
  return {v, series ? EvalMethod::TurningPointSeries : EvalMethod::OlverUniform};
}

Complex olver_j(double nu, Complex z) { return olver_j_diag(nu, z).value; }

Complex asymptotic_j_squared(AsymMode mode, double nu, Complex z) {
  switch (mode) {
    case AsymMode::Exponential: {
      // Lemma: z in V0 with |z| < 1 - eps; eps fixed at 0.05 here.
      if (!in_region(BranchRegion::V0, z) || std::abs(z) >= 0.95)
        throw DomainViolation("Exponential mode needs z in V0 with |z| < 0.95");
      return std::exp(-2.0 * nu * alpha(z)) / (2.0 * kPi * nu * psqrt(1.0 - z * z));
    }
    case AsymMode::Oscillatory: {
      // z in V1, |z| > 1 + eps (eps = 0.05), nu |Im z| <= c (c = 10).
      if (!in_region(BranchRegion::V1, z) || std::abs(z) <= 1.05 || nu * std::abs(z.imag()) > 10.0)
        throw DomainViolation("Oscillatory mode needs z in V1, |z| > 1.05, nu |Im z| <= 10");
      Complex c = std::cos(nu * beta(z) - 0.25 * kPi);
      return 2.0 / (kPi * nu * psqrt(z * z - 1.0)) * c * c;
    }
    case AsymMode::LargeArgument: {
      require_sector(z, "LargeArgument");
      return psqrt(2.0 / (kPi * z)) * std::cos(z - 0.5 * kPi * nu - 0.25 * kPi);
    }
    case AsymMode::LargeOrder: {
      // (2 pi n)^{-1/2} (e z / 2n)^n, for bounded z; we require |z|^2 <= 4(nu+1).
      if (!(nu >= 1.0)) throw DomainViolation("LargeOrder mode needs nu >= 1");
      if (std::norm(z) > 4.0 * (nu + 1.0)) throw DomainViolation("LargeOrder mode needs |z|^2 <= 4(nu+1)");
      if (z == Complex(0.0, 0.0)) return 0.0;
      return std::exp(nu * plog(std::exp(1.0) * z / (2.0 * nu))) / std::sqrt(2.0 * kPi * nu);
    }
  }
  throw DomainViolation("unknown asymptotic mode");
}

}  // namespace bte
