#include <cmath>

#include "bte/asymptotics.hpp"
#include "bte/parallel.hpp"

namespace bte {

namespace {

constexpr double kPi = 3.14159265358979323846;

double order_of(int n, int d) { return d == 2 ? n : n + 0.5; }

void check_dim(int d, const char* who) {
  if (d != 2 && d != 3) throw DomainViolation(std::string(who) + ": d must be 2 or 3");
}

double weight_at_one(int d) { return d == 2 ? 2.0 : 4.0; }

}  // namespace

Complex k_dominant_prediction(int n, Complex k, int d) {
  check_dim(d, "k_dominant_prediction");
  if (n < 1) throw DomainViolation("k_dominant_prediction: n must be >= 1");
  if (k == 0.0) throw DomainViolation("k_dominant_prediction: k must be nonzero");
  if (d == 2) return std::log(k / static_cast<double>(n)) / (kPi * k);
  return kPi / (4.0 * n * k);
}

bool k_dominant_in_regime(int n, Complex k) { return n >= 1 && std::abs(k) >= 10.0 * n; }

double comparable_regime_limit(double L, int d) {
  check_dim(d, "comparable_regime_limit");
  if (!(L >= 1.0)) throw DomainViolation("comparable_regime_limit: L must be > 1");
  if (L == 1.0) return 0.0;
  if (d == 2) return (std::sqrt(L * L - 1.0) / L + std::acosh(L)) / kPi;
  // t = cosh u removes the endpoint singularity at t = 1.
  QuadratureConfig q;
  q.rel_tol = 1e-14;
  q.abs_tol = 0.0;
  auto g = [L](double u) -> Complex {
    double ch = std::cosh(u);
    double a = ch / L + 1.0;
    return a * a / ch;
  };
  return 0.5 * integrate_gk(g, 0.0, std::acosh(L), q).value.real();
}

double airy_tail_integral(double a) {
  AiryPair p = airy(Complex(a, 0.0));
  double ai = p.ai.real(), aip = p.aip.real();
  return aip * aip - a * ai * ai;
}

double airy_regime_prediction(double r_inf, int d) {
  check_dim(d, "airy_regime_prediction");
  const double c = std::cbrt(2.0);
  return c * weight_at_one(d) * airy_tail_integral(c * r_inf);
}

NDominantProbe n_dominant_probe(int n, Complex k, int d, bool turning_factor, const QuadratureConfig& cfg) {
  check_dim(d, "n_dominant_probe");
  if (n < 1 || std::abs(k) == 0.0 || n < 2.0 * std::abs(k))
    throw DomainViolation("n_dominant_probe: needs n / |k| >= 2");
  if (!(k.real() > 0.0)) throw DomainViolation("n_dominant_probe: needs Re k > 0");
  NDominantProbe out;
  ReducedBte r = bte_reduced(k, {d, n}, cfg, false);
  out.measured = r.value * std::exp(r.log_scale);

  const double nu = order_of(n, d);
  auto g = [&](double t) -> Complex {
    Complex z = k * t / nu;
    double e = 2.0 * n * std::log(t) - 2.0 * nu * alpha_tilde(z).real();
    double v = weight_f(t, d) * std::exp(e);
    if (turning_factor) v *= (1.0 / std::sqrt(1.0 - z * z)).real();
    return v;
  };
  out.predicted = integrate_gk(g, 0.0, 1.0, cfg).value.real();
  return out;
}

LogGrowthParts log_growth_decomposition(Complex k, int n, double c, const QuadratureConfig& cfg) {
  if (n < 0) throw DomainViolation("log_growth_decomposition: n must be >= 0");
  const double x = k.real();
  if (!(c > 0.0) || !(x >= c)) throw DomainViolation("log_growth_decomposition: needs Re k >= c > 0");
  const double s = c / x;
  LogGrowthParts p;
  auto j2 = [&](double t) {
    Complex j = bessel_j(n, k * t);
    return j * j;
  };
  auto g1 = [&](double t) -> Complex { return weight_f(t, 2) * j2(t); };
  auto g3 = [&](double t) -> Complex { return weight_f(t, 2) / t * (kPi * k * t * j2(t) - 1.0); };
  p.i1 = kPi * k * integrate_gk(g1, 0.0, s, cfg, std::abs(x)).value;
  p.i2 = std::log(x) + 1.0 - s - std::log(c);
  p.i3 = integrate_gk(g3, s, 1.0, cfg, std::abs(x)).value;
  return p;
}

bool RegimeProbe::monotone() const {
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].rel_err() > samples[i - 1].rel_err()) return false;
  return true;
}

namespace {

// Fills samples[i] = (n, k, measured, predicted) for each point concurrently;
// the output order is the input order.
template <class F>
void fill(RegimeProbe& p, std::size_t count, F&& eval) {
  p.samples.resize(count);
  parallel_for(count, [&](std::size_t i) { p.samples[i] = eval(i); });
}

}  // namespace

RegimeProbe probe_k_dominant(int n, const std::vector<double>& ks, int d, const QuadratureConfig& cfg) {
  RegimeProbe p;
  p.regime = Regime::KDominant;
  p.d = d;
  fill(p, ks.size(), [&](std::size_t i) {
    RegimeSample s;
    s.n = n;
    s.k = ks[i];
    s.measured = bte_value(s.k, {d, n}, cfg).real();
    s.predicted = k_dominant_prediction(n, s.k, d).real();
    return s;
  });
  return p;
}

RegimeProbe probe_comparable(double L, const std::vector<int>& ns, int d, const QuadratureConfig& cfg) {
  RegimeProbe p;
  p.regime = Regime::ComparableL;
  p.parameter = L;
  p.d = d;
  const double lim = comparable_regime_limit(L, d);
  fill(p, ns.size(), [&](std::size_t i) {
    RegimeSample s;
    s.n = ns[i];
    s.k = ns[i] * L;
    double kb = s.k.real() * bte_value(s.k, {d, s.n}, cfg).real();
    s.measured = d == 2 ? kb : s.n * kb;
    s.predicted = lim;
    return s;
  });
  return p;
}

RegimeProbe probe_airy(double r_inf, const std::vector<int>& ns, int d, const QuadratureConfig& cfg) {
  RegimeProbe p;
  p.regime = Regime::AiryTurning;
  p.parameter = r_inf;
  p.d = d;
  const double pred = airy_regime_prediction(r_inf, d);
  fill(p, ns.size(), [&](std::size_t i) {
    RegimeSample s;
    s.n = ns[i];
    const double n = ns[i];
    s.k = n * (1.0 - r_inf * std::pow(n, -2.0 / 3.0));
    double b = bte_value(s.k, {d, s.n}, cfg).real();
    s.measured = d == 2 ? std::pow(n, 4.0 / 3.0) * b : 2.0 / kPi * std::pow(n, 7.0 / 3.0) * b;
    s.predicted = pred;
    return s;
  });
  return p;
}

RegimeProbe probe_n_dominant(const std::vector<int>& ns, double k, int d, const QuadratureConfig& cfg) {
  RegimeProbe p;
  p.regime = Regime::NDominant;
  p.d = d;
  fill(p, ns.size(), [&](std::size_t i) {
    RegimeSample s;
    s.n = ns[i];
    s.k = k;
    NDominantProbe q = n_dominant_probe(s.n, s.k, d, false, cfg);
    s.measured = q.measured.real();
    s.predicted = q.predicted;
    return s;
  });
  return p;
}

}  // namespace bte
