#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "rde/sweep.hpp"

namespace rde {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void emit_svg(std::ostream& out, const std::vector<BifurcationSample>& samples, const PlotOptions& opts) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : samples) {
    if (s.flag != SampleFlag::Ok || !s.x || !std::isfinite(*s.x)) continue;
    if (opts.y_min && *s.x < *opts.y_min) continue;
    if (opts.y_max && *s.x > *opts.y_max) continue;
    pts.emplace_back(s.a, *s.x);
  }
  const bool any_ok = std::any_of(samples.begin(), samples.end(),
                                  [](const BifurcationSample& s) { return s.flag == SampleFlag::Ok; });
  if (!any_ok) throw Error(Errc::NoPlottableData, "no ok samples to plot");

  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  if (!pts.empty()) {
    x_lo = x_hi = pts.front().first;
    y_lo = y_hi = pts.front().second;
    for (const auto& [a, x] : pts) {
      x_lo = std::min(x_lo, a);
      x_hi = std::max(x_hi, a);
      y_lo = std::min(y_lo, x);
      y_hi = std::max(y_hi, x);
    }
  }
  if (opts.y_min) y_lo = *opts.y_min;
  if (opts.y_max) y_hi = *opts.y_max;
  if (x_hi == x_lo) x_lo -= 0.5, x_hi += 0.5;
  if (y_hi == y_lo) y_lo -= 0.5, y_hi += 0.5;

  const double margin = 50.0;
  const double pw = opts.width - 2 * margin;
  const double ph = opts.height - 2 * margin;
  const auto sx = [&](double a) { return margin + (a - x_lo) / (x_hi - x_lo) * pw; };
  const auto sy = [&](double x) { return margin + (y_hi - x) / (y_hi - y_lo) * ph; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width << "\" height=\""
      << opts.height << "\" viewBox=\"0 0 " << opts.width << ' ' << opts.height << "\">\n"
      << "<title>" << escape(opts.title) << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(pw) << "\" height=\""
      << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Axis tick labels at the corners of the data range.
  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<text x=\"" << fmt(margin) << "\" y=\"" << fmt(margin + ph + 16) << "\">" << fmt(x_lo) << "</text>\n"
      << "<text x=\"" << fmt(margin + pw) << "\" y=\"" << fmt(margin + ph + 16) << "\" text-anchor=\"end\">"
      << fmt(x_hi) << "</text>\n"
      << "<text x=\"" << fmt(margin - 4) << "\" y=\"" << fmt(margin + ph) << "\" text-anchor=\"end\">"
      << fmt(y_lo) << "</text>\n"
      << "<text x=\"" << fmt(margin - 4) << "\" y=\"" << fmt(margin + 10) << "\" text-anchor=\"end\">"
      << fmt(y_hi) << "</text>\n"
      << "<text x=\"" << fmt(margin + pw / 2) << "\" y=\"" << fmt(opts.height - 10.0)
      << "\" text-anchor=\"middle\">a</text>\n"
      << "</g>\n";

  out << "<g fill=\"black\">\n";
  for (const auto& [a, x] : pts)
    out << "<circle cx=\"" << fmt(sx(a)) << "\" cy=\"" << fmt(sy(x)) << "\" r=\"" << fmt(opts.marker_radius)
        << "\"/>\n";
  out << "</g>\n</svg>\n";
  if (!out) throw Error(Errc::IoError, "SVG write failed");
}

}  // namespace rde
