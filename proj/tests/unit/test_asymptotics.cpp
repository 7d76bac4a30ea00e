#include <cmath>

#include "bte/asymptotics.hpp"
#include "bte/quadrature.hpp"
#include "bte/special_fn.hpp"
#include "doctest.h"
#include "oracles/bte_values.hpp"

using namespace bte;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("mellin_weight") {
  CHECK(std::abs(mellin_weight(0.0, 0.5, 2) - 1.0) <= 1e-15);
  CHECK(std::abs(mellin_weight(1.0, 0.5, 2) - std::log(3.0)) <= 1e-15);
  CHECK(std::abs(mellin_weight(0.0, 0.5, 3) - std::log(3.0)) <= 1e-15);
  // continuity through the removable point
  CHECK(std::abs(mellin_weight(1.0 + 1e-9, 0.5, 2) - std::log(3.0)) <= 1e-8);
  // against int t^{-z} phi(t) dt by quadrature
  for (int d : {2, 3})
    for (Complex z : {Complex(0.5, 2.0), Complex(-1.0, 0.5), Complex(2.0, -7.0)}) {
      double eps = 0.3;
      auto g = [&](double t) { return std::pow(Complex(t, 0.0), -z) / std::pow(t, d - 2); };
      QuadratureConfig q;
      q.rel_tol = 1e-13;
      Complex direct = integrate_gk(g, 1 - eps, 1 + eps, q).value;
      // M[phi](1 - z) = int t^{-z} phi
      CHECK(rel(mellin_weight(z, eps, d), direct) <= 1e-10);
    }
}

TEST_CASE("mellin_j_squared") {
  for (const auto& c : oracle::kMellinJ2) CHECK(rel(mellin_j_squared(c.z, c.nu), c.m) <= 1e-12);
  // the direct Mellin integral int t^{-1/2} J_1(t)^2 dt
  CHECK(std::abs(mellin_j_squared(0.5, 1.0).real() / oracle::kMellinJ1SqHalfDirect - 1.0) <= 1e-6);
  CHECK(std::abs(mellin_j_squared(1.0 - 1e-8, 0.0)) > 1e7);
  CHECK_THROWS_AS(mellin_j_squared(1.0, 0.0), PoleHit);
  CHECK_THROWS_AS(mellin_j_squared(3.0, 2.0), PoleHit);
  CHECK_THROWS_AS(mellin_j_squared(-2.0, 0.0), PoleHit);
  CHECK(std::abs(mellin_j_squared(2.0, 1.0)) == 0.0);
  // algebraic decay |M| ~ y^{c - 3/2} on Re z = 1/2
  double m10 = std::abs(mellin_j_squared({0.5, 10.0}, 0.0));
  double m20 = std::abs(mellin_j_squared({0.5, 20.0}, 0.0));
  double m40 = std::abs(mellin_j_squared({0.5, 40.0}, 0.0));
  CHECK(m20 < m10);
  CHECK(m40 < m20);
  CHECK(std::abs(std::log2(m20 / m40) - 1.0) <= 0.05);
}

TEST_CASE("Parseval formula against direct integrals") {
  double worst = 0.0;
  for (const auto& c : oracle::kParseval) {
    double v = parseval_eval(c.xi, c.nu, c.eps, c.d).real();
    worst = std::max(worst, std::abs(v / c.value - 1.0));
    CHECK(std::abs(parseval_direct(c.xi, c.nu, c.eps, c.d) / c.value - 1.0) <= 1e-10);
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("Parseval: contour invariance and truncation") {
  for (double c : {0.3, 0.7}) {
    MellinConfig m;
    m.c = c;
    CHECK(std::abs(parseval_eval(10.0, 1.0, 0.5, 2, m).real() / parseval_eval(10.0, 1.0, 0.5, 2).real() - 1.0) <= 1e-8);
  }
  ContourIntegral a = parseval_integral(10.0, 1.0, 0.5, 2);
  MellinConfig twice;
  twice.y_max = 2 * a.y_max;
  ContourIntegral b = parseval_integral(10.0, 1.0, 0.5, 2, twice);
  CHECK(std::abs(b.value - a.value) <= a.tail_bound);
  MellinConfig bad;
  bad.c = 1.2;
  CHECK_THROWS_AS(parseval_eval(10.0, 1.0, 0.5, 2, bad), DomainViolation);
  MellinConfig short_line;
  short_line.y_max = 5.0;
  CHECK_THROWS_AS(parseval_eval(10.0, 1.0, 0.5, 2, short_line), TruncationInsufficient);
}

TEST_CASE("i3 limit") {
  double prev = INFINITY;
  for (double eps : {0.5, 0.4, 0.2, 0.1, 0.05}) {
    double v = i3_limit(eps, 2).real();
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
  // roughly sqrt(eps): 0.306, 0.198, 0.141, 0.100
  CHECK(prev < 0.11);
  for (int d : {2, 3}) {
    double lim = i3_limit(0.5, d).real();
    double e20 = std::abs(i3_probe(20, 0.5, d) / lim - 1.0);
    double e40 = std::abs(i3_probe(40, 0.5, d) / lim - 1.0);
    double e80 = std::abs(i3_probe(80, 0.5, d) / lim - 1.0);
    INFO("d = " << d << ": " << e20 << ", " << e40 << ", " << e80);
    CHECK(e80 <= 0.10);
    // decreasing along n = 20, 40, 80. Fails: the endpoint terms at 1 +- eps
    // oscillate in n, so only the envelope decays.
    CHECK(e40 <= e20);
    CHECK(e80 <= e40);
  }
}

TEST_CASE("k-dominant prediction") {
  CHECK(std::abs(k_dominant_prediction(5, 800.0, 2) - std::log(160.0) / (kPi * 800.0)) <= 1e-18);
  CHECK(std::abs(k_dominant_prediction(5, 800.0, 3) - kPi / (4.0 * 5 * 800.0)) <= 1e-18);
  CHECK(k_dominant_in_regime(5, 50.0));
  CHECK_FALSE(k_dominant_in_regime(5, 49.0));
  CHECK_THROWS_AS(k_dominant_prediction(0, 800.0, 2), DomainViolation);
}

TEST_CASE("comparable regime limit") {
  CHECK(comparable_regime_limit(1.0, 2) == 0.0);
  CHECK(comparable_regime_limit(1.0, 3) == 0.0);
  CHECK(std::abs(comparable_regime_limit(2.0, 2) - (std::sqrt(3.0) / 2 + std::acosh(2.0)) / kPi) <= 1e-15);
  // d = 2 closed form against quadrature of (1/pi) int_1^L (t/L+1)/sqrt(t^2-1), t = cosh u
  for (double L : {1.5, 2.0, 4.0}) {
    QuadratureConfig q;
    q.rel_tol = 1e-13;
    auto g = [&](double u) { return Complex((std::cosh(u) / L + 1.0) / kPi, 0.0); };
    double integral = integrate_gk(g, 0.0, std::acosh(L), q).value.real();
    CHECK(std::abs(comparable_regime_limit(L, 2) / integral - 1.0) <= 1e-10);
  }
  CHECK(std::abs(comparable_regime_limit(2.0, 3) / oracle::kComparableD3L2 - 1.0) <= 1e-12);
  CHECK_THROWS_AS(comparable_regime_limit(0.5, 2), DomainViolation);
}

TEST_CASE("Airy regime") {
  for (const auto& c : oracle::kAiryTail) CHECK(std::abs(airy_tail_integral(c.a) / c.tail - 1.0) <= 1e-10);
  AiryPair a0 = airy(0.0);
  CHECK(std::abs(airy_regime_prediction(0.0, 2) - std::cbrt(2.0) * 2 * a0.aip.real() * a0.aip.real()) <=
        1e-14);
  CHECK(airy_regime_prediction(0.0, 3) == doctest::Approx(2 * airy_regime_prediction(0.0, 2)).epsilon(1e-14));
  CHECK(airy_regime_prediction(8.0, 2) < 1e-9);
  double prev = INFINITY;
  for (double r : {-1.0, 0.0, 1.0, 2.0}) {
    double v = airy_regime_prediction(r, 2);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("n-dominant probe") {
  NDominantProbe p = n_dominant_probe(60, 10.0, 2);
  CHECK(p.predicted > 0.0);
  CHECK(std::abs(p.measured.real() / oracle::kReducedN60K10 - 1.0) <= 1e-11);
  CHECK(std::abs(p.measured.real() / p.predicted - 1.0) <= 0.1);
  CHECK(std::abs(p.measured.imag()) / std::abs(p.measured) <= 0.05);
  NDominantProbe q = n_dominant_probe(60, {10.0, 0.001}, 2);
  CHECK(q.predicted > 0.0);
  CHECK(std::abs(q.measured.imag()) / std::abs(q.measured) <= 0.05);
  CHECK_THROWS_AS(n_dominant_probe(10, 10.0, 2), DomainViolation);
  // the turning factor only matters close to n ~ k
  NDominantProbe t = n_dominant_probe(160, 10.0, 2, true);
  CHECK(std::abs(t.measured.real() / t.predicted - 1.0) <= 1e-4);
}

TEST_CASE("regime probes") {
  RegimeProbe nd = probe_n_dominant({40, 80, 160}, 10.0, 2);
  CHECK(nd.monotone());
  CHECK(nd.samples.back().rel_err() <= 0.01);
  RegimeProbe ai = probe_airy(1.0, {200, 400, 800}, 2);
  CHECK(ai.monotone());
  CHECK(ai.samples.back().rel_err() <= 0.05);
  RegimeProbe kd = probe_k_dominant(5, {800, 1600, 3200}, 2);
  CHECK(kd.monotone());
  // ratio in [0.75, 1.25] at k = 800; measured 0.333 (see README)
  CHECK(kd.samples.front().rel_err() <= 0.25);
  RegimeProbe kd3 = probe_k_dominant(5, {800}, 3);
  CHECK(kd3.samples.front().rel_err() <= 0.1);
}

TEST_CASE("log growth decomposition") {
  QuadratureConfig q;
  q.max_panels = 1 << 16;  // k = 1e4 needs ~6400 panels for the initial split alone
  LogGrowthParts p = log_growth_decomposition(100.0, 3, 10.0, q);
  CHECK(std::abs(p.i2 - (std::log(100.0) + 1 - 0.1 - std::log(10.0))) <= 1e-15);
  for (double x : {100.0, 1e3, 1e4}) {
    LogGrowthParts g = log_growth_decomposition(x, 3, 10.0, q);
    Complex pkb = kPi * x * bte_value(x, {2, 3}, q);
    CHECK(std::abs(g.i1 + g.i2 + g.i3 - pkb) <= 1e-8 * std::abs(pkb));
  }
  // pi k B_n(k) - ln Re k stays bounded along the strip
  double sup = 0.0;
  for (double x : {1e2, 1e3, 1e4})
    for (double y : {-1.0, 0.0, 1.0}) {
      Complex k(x, y);
      sup = std::max(sup, std::abs(kPi * k * bte_value(k, {2, 3}, q) - std::log(x)));
    }
  CHECK(sup < 2.0);
  CHECK_THROWS_AS(log_growth_decomposition(5.0, 3, 10.0), DomainViolation);
}
