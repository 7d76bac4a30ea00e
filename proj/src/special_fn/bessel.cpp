#include <cmath>
#include <complex>
#include <limits>

#include "bte/special_fn.hpp"

namespace bte {

namespace {

using LComplex = std::complex<long double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kRescale = 1e200;
constexpr double kLogRescale = 460.51701859880913680;  // ln(1e200)

double lgamma_pos(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

bool is_half_integer(double nu) { return nu - std::floor(nu) == 0.5; }

// exp(i*pi*nu*sigma) with the integer and half-integer cases exact.
Complex reflection_phase(double nu, int sigma) {
  double fl = std::floor(nu);
  double frac = nu - fl;
  double sgn = (std::fmod(fl, 2.0) == 0.0) ? 1.0 : -1.0;
  if (frac == 0.0) return {sgn, 0.0};
  if (frac == 0.5) return {0.0, sgn * sigma};
  return std::polar(1.0, kPi * nu * sigma);
}

// cos w and sin w divided by exp(|Im w|).
void trig_scaled(Complex w, Complex& c, Complex& s, double& scale) {
  double y = w.imag();
  scale = std::abs(y);
  Complex ep = std::polar(std::exp(-y - scale), w.real());   // e^{iw} / e^{|y|}
  Complex em = std::polar(std::exp(y - scale), -w.real());   // e^{-iw} / e^{|y|}
  c = 0.5 * (ep + em);
  s = (ep - em) / Complex(0.0, 2.0);
}

// Sum_{m} (-z^2/4)^m / (m! (nu+1)_m), the normalized series S_nu(z).
Complex normalized_series(double nu, Complex z) {
  LComplex q = -LComplex(z) * LComplex(z) / 4.0L;
  LComplex term = 1.0L;
  LComplex sum = 1.0L;
  long double peak = 0.25L * std::norm(z);
  // squared moduli: hypot on long double dominates the cost otherwise
  for (int m = 1; m < 2000; ++m) {
    term *= q / (static_cast<long double>(m) * (static_cast<long double>(nu) + m));
    sum += term;
    if (static_cast<long double>(m) * (nu + m) > peak && std::norm(term) <= 1e-42L * std::norm(sum)) break;
  }
  return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

ScaledComplex series_to_scaled(double nu, Complex z, Complex s) {
  // (z/2)^nu / Gamma(nu+1) in log form.
  Complex lz = std::log(z / 2.0);
  ScaledComplex r;
  r.log_scale = nu * lz.real() - lgamma_pos(nu + 1.0);
  r.mant = s * std::polar(1.0, nu * lz.imag());
  return r;
}

// Hankel asymptotic expansion; valid for |arg z| < pi, used with Re z >= 0.
ScaledComplex hankel(double nu, Complex z) {
  double mu = 4.0 * nu * nu;
  Complex inv8z = 1.0 / (8.0 * z);
  Complex p = 1.0, q = 0.0;
  Complex term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) * inv8z / static_cast<double>(k);
    double mag = std::abs(term);
    if (mag > last && k > 2) break;  // asymptotic series started to diverge
    last = mag;
    // a_k/z^k carries sign (-1)^{floor(k/2)} in P and Q respectively.
    int r = k % 4;
    if (r == 0) p += term;
    else if (r == 1) q += term;
    else if (r == 2) p -= term;
    else q -= term;
    if (mag < 1e-17 * std::abs(p)) break;
  }
  Complex w = z - (0.5 * nu + 0.25) * kPi;
  Complex c, s;
  double scale;
  trig_scaled(w, c, s, scale);
  ScaledComplex r;
  r.mant = std::sqrt(2.0 / (kPi * z)) * (p * c - q * s);
  r.log_scale = scale;
  r.normalize();
  return r;
}

// Miller backward recurrence for J_nu and J_{nu+1}, normalized by a Neumann
// sum (integer order), the closed forms of J_{1/2}, J_{3/2} (half-integer
// order), or directly evaluated J_mu, J_{mu+1} otherwise.
void miller(double nu, Complex z, ScaledComplex& j0, ScaledComplex& j1) {
  double az = std::abs(z);
  double fl = std::floor(nu);
  double mu = nu - fl;
  long n = static_cast<long>(fl);
  long top = static_cast<long>(std::ceil(std::max(nu, az) + 30.0 + 12.0 * std::cbrt(az)));
  if (top < n + 2) top = n + 2;

  bool integer = (mu == 0.0);
  // Neumann sum e^{-iz} = J_0 + 2 sum (-i)^k J_k for Im z >= 0, e^{iz} otherwise.
  Complex c = (z.imag() >= 0.0) ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
  Complex cpow[4] = {1.0, c, c * c, c * c * c};

  Complex y_next = 0.0;  // y_{k+1}
  Complex y = 1.0;       // y_k, starting at k = top
  long scale_count = 0;
  Complex sum = 0.0;
  Complex cap0 = 0.0, cap1 = 0.0;
  long cap_scale0 = 0;
  long cap_scale1 = 0;
  Complex y_at0 = 0.0, y_at1 = 0.0;

  for (long k = top; k >= 0; --k) {
    if (k == n) { cap0 = y; cap_scale0 = scale_count; }
    if (k == n + 1) { cap1 = y; cap_scale1 = scale_count; }
    if (integer) sum += (k == 0 ? 1.0 : 2.0) * cpow[k % 4] * y;
    if (k == 1) y_at1 = y;
    if (k == 0) { y_at0 = y; break; }
    Complex y_prev = 2.0 * (mu + k) / z * y - y_next;
    y_next = y;
    y = y_prev;
    if (std::abs(y) > kRescale) {
      y /= kRescale;
      y_next /= kRescale;
      sum /= kRescale;
      y_at1 /= kRescale;
      ++scale_count;
    }
  }

  // Normalizing factor: J_k = y_k * ratio, with ratio in log form.
  ScaledComplex ratio;
  if (integer) {
    // target e^{-iz} (Im z >= 0) or e^{iz}
    Complex e = (z.imag() >= 0.0) ? Complex(0.0, -1.0) * z : Complex(0.0, 1.0) * z;
    ratio.mant = std::polar(1.0, e.imag()) / sum;
    ratio.log_scale = e.real();
  } else {
    ScaledComplex a0, a1;
    if (is_half_integer(nu)) {
      Complex c0, s0;
      double sc;
      trig_scaled(z, c0, s0, sc);
      Complex pre = std::sqrt(2.0 / (kPi * z));
      a0.mant = pre * s0;
      a1.mant = pre * (s0 / z - c0);
      a0.log_scale = a1.log_scale = sc;
    } else if (az < 17.0) {
      a0 = series_to_scaled(mu, z, normalized_series(mu, z));
      a1 = series_to_scaled(mu + 1.0, z, normalized_series(mu + 1.0, z));
    } else {
      a0 = hankel(mu, z);
      a1 = hankel(mu + 1.0, z);
    }
    // Normalize against whichever of the two anchors is larger.
    if (a0.log_abs() >= a1.log_abs()) {
      ratio.mant = a0.mant / y_at0;
      ratio.log_scale = a0.log_scale;
    } else {
      ratio.mant = a1.mant / y_at1;
      ratio.log_scale = a1.log_scale;
    }
  }
  j0.mant = cap0 * ratio.mant;
  j0.log_scale = ratio.log_scale - static_cast<double>(scale_count - cap_scale0) * kLogRescale;
  j0.normalize();
  j1.mant = cap1 * ratio.mant;
  j1.log_scale = ratio.log_scale - static_cast<double>(scale_count - cap_scale1) * kLogRescale;
  j1.normalize();
}

EvalMethod choose_method(double nu, double az) {
  if (az <= 12.0 || az * az <= 24.0 * (nu + 1.0)) return EvalMethod::Series;
  if (az >= std::max(25.0, 2.0 * nu * nu)) return EvalMethod::LargeArgument;
  return EvalMethod::Recurrence;
}

// J_nu and J_{nu+1} for Re z >= 0, z != 0.
EvalMethod pair_right(double nu, Complex z, ScaledComplex& j0, ScaledComplex& j1) {
  EvalMethod m = choose_method(nu, std::abs(z));
  switch (m) {
    case EvalMethod::Series:
      j0 = series_to_scaled(nu, z, normalized_series(nu, z));
      j1 = series_to_scaled(nu + 1.0, z, normalized_series(nu + 1.0, z));
      break;
    case EvalMethod::LargeArgument:
      j0 = hankel(nu, z);
      j1 = hankel(nu + 1.0, z);
      break;
    default:
      miller(nu, z, j0, j1);
      break;
  }
  return m;
}

void check_order(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainViolation("bessel order must be finite and >= 0");
}

void check_arg(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainViolation("non-finite argument");
  if (std::abs(z.imag()) > 700.0) throw OverflowDomain("|Im z| beyond the representable range");
}

ScaledComplex scaled_impl(double nu, Complex z, EvalMethod* method, ScaledComplex* next) {
  check_order(nu);
  check_arg(z);
  if (z == Complex(0.0, 0.0)) {
    ScaledComplex r;
    r.mant = (nu == 0.0) ? 1.0 : 0.0;
    if (next) *next = ScaledComplex{};
    if (method) *method = EvalMethod::Series;
    return r;
  }
  int sigma = (z.imag() >= 0.0) ? 1 : -1;
  bool reflect = z.real() < 0.0;
  Complex w = reflect ? -z : z;
  ScaledComplex j0, j1;
  EvalMethod m = pair_right(nu, w, j0, j1);
  if (reflect) {
    j0.mant *= reflection_phase(nu, sigma);
    j1.mant *= reflection_phase(nu + 1.0, sigma);
  }
  if (method) *method = m;
  if (next) *next = j1;
  return j0;
}

}  // namespace

Complex ScaledComplex::value() const {
  if (mant == Complex(0.0, 0.0)) return 0.0;
  if (log_scale > 709.0 + 0.0 && std::log(std::abs(mant)) + log_scale > 709.0)
    throw OverflowDomain("value exceeds double range");
  return mant * std::exp(log_scale);
}

void ScaledComplex::normalize() {
  double a = std::abs(mant);
  if (a == 0.0 || !std::isfinite(a)) return;
  int e = 0;
  std::frexp(a, &e);
  mant = std::ldexp(1.0, -e) * mant;
  log_scale += e * 0.69314718055994530942;
}

const char* to_string(EvalMethod m) {
  switch (m) {
    case EvalMethod::Series: return "Series";
    case EvalMethod::Recurrence: return "Recurrence";
    case EvalMethod::LargeArgument: return "LargeArgument";
    case EvalMethod::OlverUniform: return "OlverUniform";
    case EvalMethod::TurningPointSeries: return "TurningPointSeries";
  }
  return "?";
}

bool in_region(BranchRegion b, Complex z) {
  if (b == BranchRegion::V0) return z.real() > 0.0 && z.real() < 1.0;
  return z.real() > 1.0;
}

ScaledComplex bessel_j_scaled(double nu, Complex z) { return scaled_impl(nu, z, nullptr, nullptr); }

BesselEval bessel_j_diag(double nu, Complex z) {
  EvalMethod m;
  ScaledComplex r = scaled_impl(nu, z, &m, nullptr);
  return {r.value(), m};
}

Complex bessel_j(double nu, Complex z) { return scaled_impl(nu, z, nullptr, nullptr).value(); }

Complex bessel_j_prime(double nu, Complex z) {
  check_order(nu);
  ScaledComplex next;
  ScaledComplex j = scaled_impl(nu, z, nullptr, &next);
  if (nu == 0.0) return -next.value();
  if (nu >= 1.0) return 0.5 * (bessel_j(nu - 1.0, z) - next.value());
  // 0 < nu < 1: J_{nu-1} has negative order, use J' = (nu/z) J - J_{nu+1}.
  if (z == Complex(0.0, 0.0)) throw DomainViolation("J'_nu(0) is infinite for 0 < nu < 1");
  return nu / z * j.value() - next.value();
}

Complex spherical_j(int n, Complex z) {
  if (n < 0) throw DomainViolation("spherical_j needs n >= 0");
  if (z == Complex(0.0, 0.0)) return n == 0 ? 1.0 : 0.0;
  ScaledComplex j = bessel_j_scaled(n + 0.5, z);
  j.mant *= std::sqrt(kPi / (2.0 * z));
  return j.value();
}

void bessel_j_normalized_pair_scaled(double nu, Complex z, ScaledComplex& s0, ScaledComplex& s1) {
  check_order(nu);
  check_arg(z);
  // S is even in z; work in the right half-plane.
  Complex w = (z.real() < 0.0) ? -z : z;
  double aw = std::abs(w);
  s0 = ScaledComplex{};
  s1 = ScaledComplex{};
  if (aw == 0.0) {
    s0.mant = s1.mant = 1.0;
    return;
  }
  if (choose_method(nu, aw) == EvalMethod::Series) {
    s0.mant = normalized_series(nu, w);
    s1.mant = normalized_series(nu + 1.0, w);
    return;
  }
  ScaledComplex j0, j1;
  pair_right(nu, w, j0, j1);
  Complex lz = std::log(w / 2.0);
  Complex e0 = lgamma_pos(nu + 1.0) - nu * lz;
  Complex e1 = lgamma_pos(nu + 2.0) - (nu + 1.0) * lz;
  s0.mant = j0.mant * std::polar(1.0, e0.imag());
  s0.log_scale = j0.log_scale + e0.real();
  s1.mant = j1.mant * std::polar(1.0, e1.imag());
  s1.log_scale = j1.log_scale + e1.real();
}

ScaledComplex bessel_j_normalized_scaled(double nu, Complex z) {
  check_order(nu);
  check_arg(z);
  Complex w = (z.real() < 0.0) ? -z : z;
  double aw = std::abs(w);
  ScaledComplex r;
  if (aw == 0.0) {
    r.mant = 1.0;
    return r;
  }
  if (choose_method(nu, aw) == EvalMethod::Series) {
    r.mant = normalized_series(nu, w);
    return r;
  }
  ScaledComplex b;
  bessel_j_normalized_pair_scaled(nu, z, r, b);
  return r;
}

void bessel_j_normalized_pair(double nu, Complex z, Complex& s0, Complex& s1) {
  ScaledComplex a, b;
  bessel_j_normalized_pair_scaled(nu, z, a, b);
  s0 = a.value();
  s1 = b.value();
}

Complex bessel_j_normalized(double nu, Complex z) { return bessel_j_normalized_scaled(nu, z).value(); }

}  // namespace bte
