#include "cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cli/csv.hpp"

namespace losdof::cli {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};
constexpr int kMargin = 70;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool log = false;

  bool accepts(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
  double t(double v) const { return log ? std::log10(v) : v; }
  void include(double v) {
    if (!accepts(v)) return;
    lo = std::min(lo, t(v));
    hi = std::max(hi, t(v));
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      for (double d = std::ceil(lo); d <= hi + 1e-9; d += 1.0) out.push_back(d);
      if (out.size() >= 2) return out;
    }
    const double raw = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
      if (m * mag >= raw) {
        step = m * mag;
        break;
      }
    out.clear();
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) out.push_back(v);
    return out;
  }
  std::string label(double tv) const { return log ? "1e" + fmt(tv) : fmt(tv); }
};

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

SvgPlot& SvgPlot::log_x(bool on) {
  log_x_ = on;
  return *this;
}
SvgPlot& SvgPlot::log_y(bool on) {
  log_y_ = on;
  return *this;
}
SvgPlot& SvgPlot::equal_aspect(bool on) {
  equal_aspect_ = on;
  return *this;
}
SvgPlot& SvgPlot::add(Series s) {
  series_.push_back(std::move(s));
  return *this;
}
SvgPlot& SvgPlot::vline(double x) {
  vlines_.push_back(x);
  return *this;
}

std::string SvgPlot::render(int width, int height) const {
  Axis ax;
  Axis ay;
  ax.log = log_x_;
  ay.log = log_y_;
  for (const Series& s : series_)
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
      if (ax.accepts(s.x[i]) && ay.accepts(s.y[i])) {
        ax.include(s.x[i]);
        ay.include(s.y[i]);
      }
  ax.finish();
  ay.finish();

  const double pw = width - 2.0 * kMargin;
  const double ph = height - 2.0 * kMargin;
  if (equal_aspect_) {
    // Widen whichever range is short so one data unit has the same length on both axes.
    const double sx = (ax.hi - ax.lo) / pw;
    const double sy = (ay.hi - ay.lo) / ph;
    if (sx > sy) {
      const double mid = 0.5 * (ay.lo + ay.hi);
      ay.lo = mid - 0.5 * sx * ph;
      ay.hi = mid + 0.5 * sx * ph;
    } else {
      const double mid = 0.5 * (ax.lo + ax.hi);
      ax.lo = mid - 0.5 * sy * pw;
      ax.hi = mid + 0.5 * sy * pw;
    }
  }
  auto px = [&](double v) { return kMargin + (ax.t(v) - ax.lo) / (ax.hi - ax.lo) * pw; };
  auto py = [&](double v) { return height - kMargin - (ay.t(v) - ay.lo) / (ay.hi - ay.lo) * ph; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title_)
    << "</text>\n";

  for (double tv : ax.ticks()) {
    const double x = kMargin + (tv - ax.lo) / (ax.hi - ax.lo) * pw;
    o << "<line x1=\"" << fmt(x) << "\" y1=\"" << kMargin << "\" x2=\"" << fmt(x) << "\" y2=\"" << height - kMargin
      << "\" stroke=\"#e0e0e0\"/>\n"
      << "<text x=\"" << fmt(x) << "\" y=\"" << height - kMargin + 16 << "\" text-anchor=\"middle\">"
      << ax.label(tv) << "</text>\n";
  }
  for (double tv : ay.ticks()) {
    const double y = height - kMargin - (tv - ay.lo) / (ay.hi - ay.lo) * ph;
    o << "<line x1=\"" << kMargin << "\" y1=\"" << fmt(y) << "\" x2=\"" << width - kMargin << "\" y2=\"" << fmt(y)
      << "\" stroke=\"#e0e0e0\"/>\n"
      << "<text x=\"" << kMargin - 6 << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">" << ay.label(tv)
      << "</text>\n";
  }
  o << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << fmt(pw) << "\" height=\"" << fmt(ph)
    << "\" fill=\"none\" stroke=\"black\"/>\n"
    << "<text x=\"" << width / 2 << "\" y=\"" << height - 20 << "\" text-anchor=\"middle\">" << escape(x_label_)
    << "</text>\n"
    << "<text transform=\"translate(18," << height / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
    << escape(y_label_) << "</text>\n";

  for (double v : vlines_) {
    if (!ax.accepts(v)) continue;
    const double x = px(v);
    o << "<line x1=\"" << fmt(x) << "\" y1=\"" << kMargin << "\" x2=\"" << fmt(x) << "\" y2=\"" << height - kMargin
      << "\" stroke=\"#888\" stroke-dasharray=\"2,3\"/>\n";
  }

  o << "<g>\n";
  for (std::size_t k = 0; k < series_.size(); ++k) {
    const Series& s = series_[k];
    const char* color = kPalette[k % std::size(kPalette)];
    std::string pts;
    auto flush = [&] {
      if (pts.empty()) return;
      o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"" << pts << "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!ax.accepts(s.x[i]) || !ay.accepts(s.y[i])) {
        flush();
        continue;
      }
      if (s.markers) {
        o << "<circle cx=\"" << fmt(px(s.x[i])) << "\" cy=\"" << fmt(py(s.y[i])) << "\" r=\"2\" fill=\"" << color
          << "\"/>\n";
      } else {
        pts += fmt(px(s.x[i])) + "," + fmt(py(s.y[i])) + " ";
      }
    }
    flush();
    const int ly = kMargin + 16 + 16 * static_cast<int>(k);
    o << "<line x1=\"" << width - kMargin - 150 << "\" y1=\"" << ly - 4 << "\" x2=\"" << width - kMargin - 126
      << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\""
      << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n"
      << "<text x=\"" << width - kMargin - 120 << "\" y=\"" << ly << "\">" << escape(s.label) << "</text>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

void SvgPlot::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << render();
}

std::string render_heatmap(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<double>& xs, const std::vector<double>& ys,
                           const std::vector<double>& values, double limit, bool log_x) {
  const int width = 820;
  const int height = 600;
  const double pw = width - 2.0 * kMargin - 60;
  const double ph = height - 2.0 * kMargin;
  const std::size_t nx = xs.size();
  const std::size_t ny = ys.size();
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
    << "</text>\n";
  auto color = [&](double v) {
    if (!std::isfinite(v)) return std::string("#cccccc");
    const double t = std::clamp(v / limit, -1.0, 1.0);
    // white at 0, red for overestimates, blue for underestimates
    const int a = static_cast<int>(std::lround(255.0 * (1.0 - std::abs(t))));
    char buf[8];
    if (t >= 0)
      std::snprintf(buf, sizeof buf, "#ff%02x%02x", a, a);
    else
      std::snprintf(buf, sizeof buf, "#%02x%02xff", a, a);
    return std::string(buf);
  };
  const double cw = pw / static_cast<double>(nx);
  const double ch = ph / static_cast<double>(ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      o << "<rect x=\"" << fmt(kMargin + cw * static_cast<double>(i)) << "\" y=\""
        << fmt(height - kMargin - ch * static_cast<double>(j + 1)) << "\" width=\"" << fmt(cw + 0.05)
        << "\" height=\"" << fmt(ch + 0.05) << "\" fill=\"" << color(values[j * nx + i]) << "\"/>\n";
  o << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << fmt(pw) << "\" height=\"" << fmt(ph)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < nx; i += std::max<std::size_t>(1, nx / 5))
    o << "<text x=\"" << fmt(kMargin + cw * (static_cast<double>(i) + 0.5)) << "\" y=\"" << height - kMargin + 16
      << "\" text-anchor=\"middle\">" << fmt(xs[i]) << "</text>\n";
  for (std::size_t j = 0; j < ny; j += std::max<std::size_t>(1, ny / 5))
    o << "<text x=\"" << kMargin - 6 << "\" y=\"" << fmt(height - kMargin - ch * (static_cast<double>(j) + 0.5) + 4)
      << "\" text-anchor=\"end\">" << fmt(ys[j]) << "</text>\n";
  o << "<text x=\"" << kMargin + pw / 2 << "\" y=\"" << height - 20 << "\" text-anchor=\"middle\">"
    << escape(x_label) << (log_x ? " (log spacing)" : "") << "</text>\n"
    << "<text transform=\"translate(18," << height / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
    << escape(y_label) << "</text>\n";
  const double bx = width - kMargin - 30;
  for (int k = 0; k < 20; ++k) {
    const double v = limit * (1.0 - 2.0 * (k + 0.5) / 20.0);
    o << "<rect x=\"" << fmt(bx) << "\" y=\"" << fmt(kMargin + ph * k / 20.0) << "\" width=\"16\" height=\""
      << fmt(ph / 20.0 + 0.05) << "\" fill=\"" << color(v) << "\"/>\n";
  }
  o << "<text x=\"" << fmt(bx + 20) << "\" y=\"" << kMargin + 4 << "\">" << fmt(limit) << "</text>\n"
    << "<text x=\"" << fmt(bx + 20) << "\" y=\"" << fmt(kMargin + ph + 4) << "\">" << fmt(-limit) << "</text>\n"
    << "</svg>\n";
  return o.str();
}

}  // namespace losdof::cli
