#include "mudef/cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace mudef::cli {

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 80, kRight = 200, kTop = 30, kBottom = 50;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string scan_plot_svg(const std::vector<trace::ScanRow>& rows) {
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  std::vector<std::string> order;
  double mu_lo = 0.0, mu_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  for (const auto& r : rows) {
    const std::string key = r.a.to_string() + " x " + r.b.to_string();
    if (!series.count(key)) order.push_back(key);
    auto& pts = series[key];
    mu_lo = std::min(mu_lo, r.mu);
    mu_hi = std::max(mu_hi, r.mu);
    if (!r.ok() || r.estimate.product_measures <= 0.0) continue;
    const double y = r.estimate.deviation / r.estimate.product_measures;
    pts.emplace_back(r.mu, y);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  if (mu_hi - mu_lo < 1e-12) mu_hi = mu_lo + 1.0;
  if (y_hi - y_lo < 1e-12) { y_lo -= 0.5; y_hi += 0.5; }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double mu) { return kLeft + (mu - mu_lo) / (mu_hi - mu_lo) * plot_w; };
  const auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
                    num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (mu_lo < 0.0) {
    const double x0 = px(mu_lo), x1 = px(std::min(0.0, mu_hi));
    svg += "<rect x=\"" + num(x0) + "\" y=\"" + num(kTop) + "\" width=\"" + num(x1 - x0) + "\" height=\"" +
           num(plot_h) + "\" fill=\"#f3e6c8\"/>\n";
    svg += "<text x=\"" + num(x0 + 6) + "\" y=\"" + num(kTop + 16) + "\" fill=\"#8a6d2f\">conjecture region (mu &lt; 0)</text>\n";
  }
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) + "\" height=\"" +
         num(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
  if (y_lo < 0.0 && y_hi > 0.0) {
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" +
           num(py(0)) + "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (mu_lo <= 0.0 && mu_hi >= 0.0) {
    svg += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(px(0)) + "\" y2=\"" +
           num(kTop + plot_h) + "\" stroke=\"black\" stroke-dasharray=\"2 2\"/>\n";
    svg += "<circle cx=\"" + num(px(0)) + "\" cy=\"" + num(py(0)) + "\" r=\"4\" fill=\"black\"/>\n";
    svg += "<text x=\"" + num(px(0) + 6) + "\" y=\"" + num(py(0) - 6) + "\">equality at mu = 0</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double mu = mu_lo + (mu_hi - mu_lo) * i / 4.0;
    const double y = y_lo + (y_hi - y_lo) * i / 4.0;
    svg += "<text x=\"" + num(px(mu)) + "\" y=\"" + num(kTop + plot_h + 18) + "\" text-anchor=\"middle\">" +
           label(mu) + "</text>\n";
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(y) + 4) + "\" text-anchor=\"end\">" + label(y) +
           "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) + "\" text-anchor=\"middle\">mu</text>\n";
  svg += "<text transform=\"translate(18," + num(kTop + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">(trace - m(A) m(B)) / m(A) m(B)</text>\n";

  for (std::size_t i = 0; i < order.size(); ++i) {
    const char* color = kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
    const auto& pts = series[order[i]];
    std::string path;
    for (const auto& [mu, y] : pts) path += num(px(mu)) + "," + num(py(y)) + " ";
    if (!path.empty()) {
      svg += "<polyline points=\"" + path + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
      for (const auto& [mu, y] : pts) {
        svg += "<circle cx=\"" + num(px(mu)) + "\" cy=\"" + num(py(y)) + "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
      }
    }
    const double ly = kTop + 10 + 18.0 * i;
    svg += "<line x1=\"" + num(kWidth - kRight + 12) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(kWidth - kRight + 32) +
           "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kWidth - kRight + 36) + "\" y=\"" + num(ly + 4) + "\">" + escape(order[i]) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace mudef::cli
