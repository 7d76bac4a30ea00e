#include "bte/gamma.hpp"

#include <cmath>
#include <complex>

namespace bte {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

constexpr double kLanczos[9] = {0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,      -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex i(0.0, 1.0);
  if (z.imag() >= 0.0) return -i * kPi * z + std::log((std::exp(2.0 * i * kPi * z) - 1.0) / (2.0 * i));
  return i * kPi * z + std::log((1.0 - std::exp(-2.0 * i * kPi * z)) / (2.0 * i));
}

bool at_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

Complex log_gamma(Complex z) {
  if (at_pole(z)) throw PoleHit("log_gamma: pole at a non-positive integer");
  if (z.real() >= 0.5) return lanczos(z);
  return std::log(kPi) - log_sin_pi(z) - lanczos(1.0 - z);
}

Complex rgamma(Complex z) {
  if (at_pole(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

}  // namespace bte
