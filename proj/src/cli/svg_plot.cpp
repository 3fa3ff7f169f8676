#include "svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace driftmax::cli {

namespace {

std::string fmt(double v, int digits = 2) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("0");
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

void write_ratio_plot(std::ostream& out, const std::vector<std::pair<double, double>>& points, const std::string& title) {
  constexpr double W = 640, H = 400, left = 70, right = 20, top = 40, bottom = 50;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!points.empty()) {
    xmin = xmax = std::log2(points.front().first);
    ymax = points.front().second;
    for (const auto& [n, r] : points) {
      xmin = std::min(xmin, std::log2(n));
      xmax = std::max(xmax, std::log2(n));
      ymax = std::max(ymax, r);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (!(ymax > 0)) ymax = 1;
    ymax *= 1.1;
  }
  auto px = [&](double lx) { return left + (lx - xmin) / (xmax - xmin) * (W - left - right); };
  auto py = [&](double r) { return H - bottom - (r - ymin) / (ymax - ymin) * (H - top - bottom); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W, 0) << "\" height=\"" << fmt(H, 0)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(W / 2, 0) << "\" y=\"22\" text-anchor=\"middle\">" << escape(title) << "</text>\n";
  out << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(H - bottom) << "\" x2=\"" << fmt(W - right) << "\" y2=\""
      << fmt(H - bottom) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(left) << "\" y2=\"" << fmt(H - bottom)
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double r = ymin + (ymax - ymin) * i / 4.0;
    out << "<text x=\"" << fmt(left - 6) << "\" y=\"" << fmt(py(r) + 4) << "\" text-anchor=\"end\">" << fmt(r, 3)
        << "</text>\n";
  }
  for (const auto& [n, r] : points) {
    out << "<text x=\"" << fmt(px(std::log2(n))) << "\" y=\"" << fmt(H - bottom + 18)
        << "\" text-anchor=\"middle\">2^" << fmt(std::log2(n), 1) << "</text>\n";
  }
  out << "<text x=\"" << fmt(W / 2, 0) << "\" y=\"" << fmt(H - 10) << "\" text-anchor=\"middle\">N</text>\n";
  if (!points.empty()) {
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& [n, r] : points) out << fmt(px(std::log2(n))) << ',' << fmt(py(r)) << ' ';
    out << "\"/>\n";
    for (const auto& [n, r] : points)
      out << "<circle cx=\"" << fmt(px(std::log2(n))) << "\" cy=\"" << fmt(py(r)) << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace driftmax::cli
