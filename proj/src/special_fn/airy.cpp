#include <cmath>
#include <complex>

#include "bte/special_fn.hpp"

namespace bte {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMaclaurinRadius = 8.0;

// Minimal complex arithmetic on __float128. The Maclaurin series loses about
// 13 digits to cancellation at |z| = 8 on the positive axis, so double and
// long double are both too short.
struct Q {
  __float128 re, im;
};
inline Q operator+(Q a, Q b) { return {a.re + b.re, a.im + b.im}; }
inline Q operator-(Q a, Q b) { return {a.re - b.re, a.im - b.im}; }
inline Q operator*(Q a, Q b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Q operator*(Q a, __float128 s) { return {a.re * s, a.im * s}; }
inline __float128 qabs2(Q a) { return a.re * a.re + a.im * a.im; }

// Ai(0) and -Ai'(0) as double-double sums.
const __float128 kAi0 = static_cast<__float128>(0.3550280538878172) + 2.05233632436212e-17;
const __float128 kAip0 = static_cast<__float128>(0.2588194037928068) - 2.522243111610832e-17;

AiryPair maclaurin(Complex zd) {
  Q z{zd.real(), zd.imag()};
  Q z2 = z * z;
  Q z3 = z2 * z;
  // f = sum a_k, a_k = a_{k-1} z^3 / ((3k-1) 3k);  f' = sum_{k>=1} a_{k-1} z^2/(3k-1)
  // g = z sum b_k, b_k = b_{k-1} z^3 / (3k (3k+1)); g' = sum (3k+1) b_k
  Q a{1, 0}, b{1, 0};
  Q f{1, 0}, fp{0, 0}, g{1, 0}, gp{1, 0};
  const __float128 eps2 = static_cast<__float128>(1e-32) * 1e-32;
  for (int k = 1; k < 200; ++k) {
    __float128 kk = k;
    fp = fp + a * z2 * (1 / (3 * kk - 1));
    a = a * z3 * (1 / ((3 * kk - 1) * 3 * kk));
    b = b * z3 * (1 / (3 * kk * (3 * kk + 1)));
    f = f + a;
    g = g + b;
    gp = gp + b * (3 * kk + 1);
    if (qabs2(a) < eps2 * qabs2(f) && qabs2(b) < eps2 * qabs2(g) && k > 3) break;
  }
  g = g * z;
  Q ai = f * kAi0 - g * kAip0;
  Q aip = fp * kAi0 - gp * kAip0;
  return {Complex(static_cast<double>(ai.re), static_cast<double>(ai.im)),
          Complex(static_cast<double>(aip.re), static_cast<double>(aip.im))};
}

// u_k and v_k of the Airy asymptotic expansions.
struct AiryCoeffs {
  double u[40], v[40];
  AiryCoeffs() {
    u[0] = v[0] = 1.0;
    for (int k = 1; k < 40; ++k) {
      double kk = k;
      u[k] = u[k - 1] * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216 * kk);
      v[k] = -(6 * kk + 1) / (6 * kk - 1) * u[k];
    }
  }
};
const AiryCoeffs kCoef;

// Sums sum_k s_k c_k / xi^k with s_k = sign pattern, stopping at the smallest term.
template <class Sign>
Complex asym_sum(const double* c, Complex inv_xi, int start, int step, Sign sign) {
  Complex sum = 0.0;
  Complex p = std::pow(inv_xi, start);
  Complex pstep = std::pow(inv_xi, step);
  double last = INFINITY;
  for (int k = start; k < 40; k += step) {
    Complex term = sign(k) * c[k] * p;
    double m = std::abs(term);
    if (m > last) break;
    sum += term;
    if (m < 1e-17 * std::abs(sum)) break;
    last = m;
    p *= pstep;
  }
  return sum;
}

AiryPair asymptotic(Complex z) {
  double ph = std::arg(z);
  if (std::abs(ph) <= 2.0 * kPi / 3.0) {
    Complex xi = 2.0 / 3.0 * z * std::sqrt(z);
    Complex e = -xi;
    if (e.real() > 700.0) throw OverflowDomain("Airy function overflows in the growing sector");
    Complex inv = 1.0 / xi;
    auto alt = [](int k) { return (k % 2 == 0) ? 1.0 : -1.0; };
    Complex su = asym_sum(kCoef.u, inv, 0, 1, alt);
    Complex sv = asym_sum(kCoef.v, inv, 0, 1, alt);
    Complex q = std::pow(z, 0.25);
    Complex ex = std::exp(e) / (2.0 * std::sqrt(kPi));
    return {ex * su / q, -ex * q * sv};
  }
  // Oscillatory forms in w = -z, |arg w| < pi/3.
  Complex w = -z;
  Complex xi = 2.0 / 3.0 * w * std::sqrt(w);
  if (std::abs(xi.imag()) > 700.0) throw OverflowDomain("Airy function overflows");
  Complex inv = 1.0 / xi;
  auto alt2 = [](int k) { return ((k / 2) % 2 == 0) ? 1.0 : -1.0; };
  Complex ue = asym_sum(kCoef.u, inv, 0, 2, alt2);
  Complex uo = asym_sum(kCoef.u, inv, 1, 2, alt2);
  Complex ve = asym_sum(kCoef.v, inv, 0, 2, alt2);
  Complex vo = asym_sum(kCoef.v, inv, 1, 2, alt2);
  Complex th = xi - 0.25 * kPi;
  Complex c = std::cos(th), s = std::sin(th);
  Complex q = std::pow(w, 0.25);
  double rp = 1.0 / std::sqrt(kPi);
  return {rp / q * (c * ue + s * uo), rp * q * (s * ve - c * vo)};
}

}  // namespace

AiryPair airy(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainViolation("airy: non-finite argument");
  if (std::abs(z) <= kMaclaurinRadius) return maclaurin(z);
  return asymptotic(z);
}

Complex airy_ai(Complex z) { return airy(z).ai; }
Complex airy_ai_prime(Complex z) { return airy(z).aip; }

}  // namespace bte
