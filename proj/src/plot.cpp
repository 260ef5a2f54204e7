#include "tropsvm/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tropsvm {

namespace {

constexpr double kWidth = 640, kHeight = 440;
constexpr double kLeft = 70, kRight = 620, kTop = 46, kBottom = 390;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out.push_back(c);
  }
  return out;
}

struct Range {
  double lo, hi;
  double to_px(double v, double px_lo, double px_hi) const {
    return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
  }
};

Range padded(double lo, double hi, double rel) {
  if (hi - lo < 1e-12) {
    const double pad = std::max(1.0, std::abs(lo) * 0.5);
    return {lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * rel;
  return {lo - pad, hi + pad};
}

}  // namespace

void write_plot_svg(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<Series>& series, bool log_x) {
  if (series.empty()) throw std::invalid_argument("no series to plot");
  for (const Series& s : series) {
    if (s.x.empty() || s.x.size() != s.y.size())
      throw std::invalid_argument("series '" + s.name + "' has mismatched or empty data");
    if (!s.err.empty() && s.err.size() != s.y.size())
      throw std::invalid_argument("series '" + s.name + "' has mismatched error bars");
    if (log_x)
      for (double v : s.x)
        if (!(v > 0.0))
          throw std::invalid_argument("log-scale x needs positive values");
  }

  const auto xval = [&](double v) { return log_x ? std::log10(v) : v; };
  double xlo = xval(series[0].x[0]), xhi = xlo;
  double ylo = series[0].y[0], yhi = ylo;
  for (const Series& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xlo = std::min(xlo, xval(s.x[i]));
      xhi = std::max(xhi, xval(s.x[i]));
      const double e = s.err.empty() ? 0.0 : s.err[i];
      ylo = std::min(ylo, s.y[i] - e);
      yhi = std::max(yhi, s.y[i] + e);
    }
  const Range xr = padded(xlo, xhi, 0.04);
  const Range yr = padded(ylo, yhi, 0.08);

  const auto px = [&](double v) { return xr.to_px(xval(v), kLeft, kRight); };
  const auto py = [&](double v) { return yr.to_px(v, kBottom, kTop); };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"#ffffff\"/>\n";
  out << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"24\" text-anchor=\"middle\" "
         "font-size=\"16\">"
      << escape(title) << "</text>\n";

  // Ticks and gridlines: five per axis; log-x labels show the raw value.
  for (int t = 0; t <= 4; ++t) {
    const double fx = xr.lo + (xr.hi - xr.lo) * t / 4.0;
    const double gx = xr.to_px(fx, kLeft, kRight);
    const double raw = log_x ? std::pow(10.0, fx) : fx;
    out << "<line x1=\"" << num(gx) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(gx)
        << "\" y2=\"" << num(kBottom) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << num(gx) << "\" y=\"" << num(kBottom + 18)
        << "\" text-anchor=\"middle\">" << tick_label(raw) << "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    const double gy = yr.to_px(fy, kBottom, kTop);
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(gy) << "\" x2=\"" << num(kRight)
        << "\" y2=\"" << num(gy) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(gy + 4)
        << "\" text-anchor=\"end\">" << tick_label(fy) << "</text>\n";
  }
  out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
      << num(kRight - kLeft) << "\" height=\"" << num(kBottom - kTop)
      << "\" fill=\"none\" stroke=\"#444444\"/>\n";
  out << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"" << num(kHeight - 12)
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
  out << "<text x=\"18\" y=\"" << num((kTop + kBottom) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << num((kTop + kBottom) / 2)
      << ")\">" << escape(y_label) << "</text>\n";

  for (const Series& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i)
      out << (i ? " " : "") << num(px(s.x[i])) << ',' << num(py(s.y[i]));
    out << "\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double cx = px(s.x[i]), cy = py(s.y[i]);
      if (!s.err.empty() && s.err[i] > 0.0) {
        const double top = py(s.y[i] + s.err[i]), bot = py(s.y[i] - s.err[i]);
        out << "<line x1=\"" << num(cx) << "\" y1=\"" << num(top) << "\" x2=\"" << num(cx)
            << "\" y2=\"" << num(bot) << "\" stroke=\"" << s.color << "\"/>\n";
        out << "<line x1=\"" << num(cx - 4) << "\" y1=\"" << num(top) << "\" x2=\""
            << num(cx + 4) << "\" y2=\"" << num(top) << "\" stroke=\"" << s.color << "\"/>\n";
        out << "<line x1=\"" << num(cx - 4) << "\" y1=\"" << num(bot) << "\" x2=\""
            << num(cx + 4) << "\" y2=\"" << num(bot) << "\" stroke=\"" << s.color << "\"/>\n";
      }
      out << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"3\" fill=\""
          << s.color << "\"/>\n";
    }
  }

  // Legend, top-right inside the frame.
  double ly = kTop + 16;
  for (const Series& s : series) {
    out << "<line x1=\"" << num(kRight - 150) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
        << num(kRight - 120) << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << s.color
        << "\" stroke-width=\"1.8\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "")
        << "/>\n";
    out << "<text x=\"" << num(kRight - 112) << "\" y=\"" << num(ly) << "\">" << escape(s.name)
        << "</text>\n";
    ly += 18;
  }
  out << "</svg>\n";
  if (!out) throw std::invalid_argument("write failed: " + path);
}

}  // namespace tropsvm
