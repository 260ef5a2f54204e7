// Minimal deterministic SVG line plots: polylines with optional error bars,
// axis ticks, and a legend. Byte-identical output for identical input.
#pragma once

#include <string>
#include <vector>

namespace tropsvm {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> err;  ///< half-height of the error bar; empty for none
  std::string color = "#c0392b";
  bool dashed = false;
};

/// Writes a 640x440 self-contained SVG. With log_x, the x axis is log10-scaled
/// (all x must be positive). Degenerate ranges are padded; an empty series
/// list or an empty series is an error.
void write_plot_svg(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<Series>& series, bool log_x = false);

}  // namespace tropsvm
