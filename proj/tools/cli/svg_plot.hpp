#pragma once

#include <string>
#include <vector>

namespace losdof::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
  bool markers = false;  ///< draw points instead of a polyline
};

/// Minimal SVG 1.1 line chart with optional log axes. Non-finite points (and non-positive ones on a
/// log axis) break the polyline.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  SvgPlot& log_x(bool on = true);
  SvgPlot& log_y(bool on = true);
  SvgPlot& equal_aspect(bool on = true);
  SvgPlot& add(Series s);
  /// Vertical guide line, e.g. a model breakpoint.
  SvgPlot& vline(double x);

  std::string render(int width = 800, int height = 560) const;
  void save(const std::string& path) const;

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  bool log_x_ = false;
  bool log_y_ = false;
  bool equal_aspect_ = false;
  std::vector<Series> series_;
  std::vector<double> vlines_;
};

/// Heat map of a regular grid of values (row-major, rows along y), with a diverging color scale
/// clipped to [-limit, limit].
std::string render_heatmap(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<double>& xs, const std::vector<double>& ys,
                           const std::vector<double>& values, double limit, bool log_x);

}  // namespace losdof::cli
