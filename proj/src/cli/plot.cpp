#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "bte/cli.hpp"

namespace bte {

namespace {

constexpr int kW = 800, kH = 600, kMargin = 60;

// Ten distinguishable colors, cycled by n.
const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(const ParsedTable& t) {
  ContourBox view{0.0, 1.0, -1.0, 1.0};
  if (t.manifest && !t.manifest->box.empty()) {
    view = t.manifest->box;
  } else if (!t.records.empty()) {
    view = {INFINITY, -INFINITY, INFINITY, -INFINITY};
    for (const auto& r : t.records) {
      view.re_min = std::min(view.re_min, r.k.real());
      view.re_max = std::max(view.re_max, r.k.real());
      view.im_min = std::min(view.im_min, -std::abs(r.k.imag()));
      view.im_max = std::max(view.im_max, std::abs(r.k.imag()));
    }
    double pad = 0.05 * std::max(view.re_max - view.re_min, view.im_max - view.im_min) + 1e-3;
    view = {view.re_min - pad, view.re_max + pad, view.im_min - pad, view.im_max + pad};
  }
  double margin = 0.0;
  if (!t.records.empty()) {
    margin = INFINITY;
    for (const auto& r : t.records) margin = std::min(margin, std::abs(r.k.imag()));
  } else if (t.manifest) {
    margin = t.manifest->strip_margin;
  }

  const double pw = kW - 2 * kMargin, ph = kH - 2 * kMargin;
  auto X = [&](double re) { return kMargin + (re - view.re_min) / (view.re_max - view.re_min) * pw; };
  auto Y = [&](double im) { return kMargin + (view.im_max - im) / (view.im_max - view.im_min) * ph; };
  auto clampY = [&](double im) { return std::clamp(Y(im), double(kMargin), double(kMargin) + ph); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kW) + "\" height=\"" +
       std::to_string(kH) + "\" viewBox=\"0 0 " + std::to_string(kW) + " " + std::to_string(kH) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(kW) + "\" height=\"" + std::to_string(kH) +
       "\" fill=\"white\"/>\n";
  s += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
       "\" fill=\"none\" stroke=\"black\"/>\n";

  // Empirical strip |Im k| < margin.
  if (margin > 0.0 && std::isfinite(margin)) {
    double y0 = clampY(margin), y1 = clampY(-margin);
    s += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(y0) + "\" width=\"" + num(pw) + "\" height=\"" + num(y1 - y0) +
         "\" fill=\"#2ca02c\" fill-opacity=\"0.15\"/>\n";
  }
  if (view.im_min < 0.0 && view.im_max > 0.0)
    s += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(Y(0.0)) + "\" x2=\"" + num(kMargin + pw) + "\" y2=\"" +
         num(Y(0.0)) + "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    double re = view.re_min + i * (view.re_max - view.re_min) / 4.0;
    double im = view.im_min + i * (view.im_max - view.im_min) / 4.0;
    s += "<text x=\"" + num(X(re)) + "\" y=\"" + num(kMargin + ph + 18) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" + label(re) + "</text>\n";
    s += "<text x=\"" + num(kMargin - 6) + "\" y=\"" + num(Y(im) + 4) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" + label(im) + "</text>\n";
  }
  s += "<text x=\"" + num(kW / 2.0) + "\" y=\"" + num(kH - 12) +
       "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">Re k</text>\n";
  s += "<text x=\"16\" y=\"" + num(kH / 2.0) + "\" font-family=\"sans-serif\" font-size=\"13\" " +
       "text-anchor=\"middle\" transform=\"rotate(-90 16 " + num(kH / 2.0) + ")\">Im k</text>\n";

  std::string title = t.records.empty() ? "no eigenvalues in the box; strip is vacuous"
                                        : std::to_string(t.records.size()) + " eigenvalues, strip margin " +
                                              label(margin) + ", color = n mod 10";
  s += "<text x=\"" + num(kW / 2.0) + "\" y=\"30\" font-family=\"sans-serif\" font-size=\"14\" " +
       "text-anchor=\"middle\">" + title + "</text>\n";

  for (const auto& r : t.records) {
    double re = r.k.real(), im = r.k.imag();
    if (re < view.re_min || re > view.re_max || im < view.im_min || im > view.im_max) continue;
    s += "<circle cx=\"" + num(X(re)) + "\" cy=\"" + num(Y(im)) + "\" r=\"3\" fill=\"" + kPalette[r.mode.n % 10] +
         "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace bte
