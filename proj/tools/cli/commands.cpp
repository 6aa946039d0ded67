#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>

#include "cli/csv.hpp"
#include "cli/svg_plot.hpp"
#include "losdof/asymptotics.hpp"
#include "losdof/exact_bandwidth.hpp"
#include "losdof/multiplexing.hpp"

namespace losdof::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ArrayConfig make_array(const ArrayOptions& a) {
  return ArrayConfig(a.source_length, a.receiver_length, a.wavelength);
}

double angle_from_pi_units(double t) {
  if (!(t > 0.0 && t < 1.0)) throw UsageError("angles are given in units of pi and must lie in (0, 1)");
  return t * kPi;
}

std::vector<double> log_space(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo)) throw UsageError("range must satisfy 0 < min < max");
  if (n < 2) throw UsageError("a range needs at least two points");
  std::vector<double> out(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = i + 1 == n ? hi : std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
}

const char* segment_id(SegmentKind k) {
  switch (k) {
    case SegmentKind::flat: return "1";
    case SegmentKind::medium: return "2";
    case SegmentKind::far: return "3";
    case SegmentKind::far_broadside: return "3star";
  }
  return "?";
}

// -0 would print as "-0"
double neg(double v) { return v == 0.0 ? 0.0 : -v; }

}  // namespace

void cmd_bandwidth(const BandwidthConfig& c, std::ostream& out, std::ostream& log) {
  if (c.theta.empty()) throw UsageError("bandwidth: the theta list is empty");
  const ArrayConfig cfg = make_array(c.array);
  const double ls = cfg.source_length();

  std::optional<Orientation> orientation;
  if (c.orientation == "z") {
    orientation = Orientation::e_z();
  } else if (c.orientation == "x") {
    orientation = Orientation::e_x();
  } else if (c.orientation == "general") {
    if (c.direction.size() != 3) throw UsageError("bandwidth: general orientation needs --direction vx vy vz");
    orientation = Orientation::normalized(Vector3<double>(c.direction[0], c.direction[1], c.direction[2]));
  } else {
    throw UsageError("bandwidth: orientation must be z, x or general");
  }

  std::vector<double> radii = c.radii;
  if (radii.empty()) radii = log_space(c.r_min, c.r_max, c.points);
  for (double r : radii)
    if (!(r > 0.0)) throw UsageError("bandwidth: R / L_s must be positive");

  for (double t_pi : c.theta) angle_from_pi_units(t_pi);

  CsvWriter csv(out);
  csv.header({"R_over_Ls", "theta", "W_exact_lambda", "W_asym_lambda", "segment_index"});
  SvgPlot plot("Center bandwidth vs distance (orientation " + c.orientation + ")", "R / L_s", "W (1/lambda)");
  plot.log_x().log_y();
  std::size_t invalid_rows = 0;

  for (double t_pi : c.theta) {
    const double theta = angle_from_pi_units(t_pi);
    std::optional<PiecewiseBandwidthModel> model;
    try {
      if (c.orientation == "z")
        model = build_model_z(theta, cfg);
      else if (c.orientation == "x")
        model = build_model_x(theta, cfg);
      else
        model = build_model_general(theta, *orientation, cfg);
    } catch (const DegenerateOrientationError&) {
      log << "note: orientation along e_y has no asymptotic model; W_asym_lambda is 0\n";
    }

    Series exact{"exact, theta=" + fmt(t_pi) + "pi", {}, {}};
    Series asym{"asymptotic, theta=" + fmt(t_pi) + "pi", {}, {}, true};
    for (double r_ratio : radii) {
      const double r = r_ratio * ls;
      const Placement p(r, theta);
      double w_exact = kNaN;
      if (classify(p, cfg, c.array.min_separation) == Validity::invalid) {
        ++invalid_rows;
      } else if (c.orientation == "z") {
        w_exact = local_bandwidth_z(0.0, p, cfg).w;
      } else if (c.orientation == "x") {
        w_exact = local_bandwidth_x(0.0, p, cfg).w;
      } else {
        w_exact = local_bandwidth_general(0.0, p, *orientation, cfg).w;
      }
      const double w_asym = model ? eval_model(*model, r) : 0.0;
      const std::size_t seg = model ? active_segment(*model, r) + 1 : 0;
      csv.row(r_ratio, t_pi, w_exact, w_asym, seg);
      exact.x.push_back(r_ratio);
      exact.y.push_back(w_exact);
      asym.x.push_back(r_ratio);
      asym.y.push_back(w_asym);
    }
    if (model)
      for (double b : model->breakpoints) plot.vline(b / ls);
    plot.add(std::move(exact)).add(std::move(asym));
  }
  if (invalid_rows > 0)
    log << "note: " << invalid_rows << " rows lie inside the invalid near-field region; W_exact_lambda is nan there\n";
  if (!c.svg.empty()) plot.save(c.svg);
}

void cmd_errormap(const ErrorMapConfig& c, std::ostream& out, std::ostream& log) {
  if (c.family != "z" && c.family != "x") throw UsageError("errormap: family must be z or x");
  if (c.variant != "multi" && c.variant != "dual") throw UsageError("errormap: variant must be multi or dual");
  if (c.theta_points < 1) throw UsageError("errormap: need at least one angle");
  const ArrayConfig cfg = make_array(c.array);
  const double ls = cfg.source_length();
  const std::vector<double> radii = log_space(c.r_min, c.r_max, c.r_points);
  ModelOptions mo;
  mo.formation = c.variant == "dual" ? Formation::dual_slope : Formation::multi_slope;

  std::vector<double> thetas(c.theta_points);
  for (std::size_t j = 0; j < thetas.size(); ++j)
    thetas[j] = 0.5 * static_cast<double>(j + 1) / static_cast<double>(c.theta_points);

  CsvWriter csv(out);
  csv.header({"R_over_Ls", "theta_over_pi", "rel_error"});
  std::vector<double> grid;
  grid.reserve(radii.size() * thetas.size());
  std::size_t invalid = 0;
  for (double t_pi : thetas) {
    const double theta = t_pi * kPi;
    const PiecewiseBandwidthModel model = c.family == "z" ? build_model_z(theta, cfg, mo) : build_model_x(theta, cfg, mo);
    for (double r_ratio : radii) {
      const double r = r_ratio * ls;
      const Placement p(r, theta);
      double err = kNaN;
      if (classify(p, cfg, c.array.min_separation) != Validity::invalid) {
        const double w = c.family == "z" ? local_bandwidth_z(0.0, p, cfg).w : local_bandwidth_x(0.0, p, cfg).w;
        err = (eval_model(model, r) - w) / w;
      } else {
        ++invalid;
      }
      csv.row(r_ratio, t_pi, err);
      grid.push_back(err);
    }
  }
  if (invalid > 0) log << "note: " << invalid << " cells lie inside the invalid near-field region (rel_error nan)\n";
  if (!c.svg.empty())
    save_text(c.svg, render_heatmap("Relative error of the " + c.variant + "-slope " + c.family + " model",
                                    "R / L_s", "theta / pi", radii, thetas, grid, 0.5, true));
}

void cmd_region(const RegionConfig& c, std::ostream& out, std::ostream& log) {
  if (c.source_heights.empty()) throw UsageError("region: the Z_s list is empty");
  std::vector<OrientationConstraint> constraints;
  if (c.constraint == "3d" || c.constraint == "both") constraints.push_back(OrientationConstraint::three_d);
  if (c.constraint == "2d" || c.constraint == "both") constraints.push_back(OrientationConstraint::two_d);
  std::vector<MultiplexMode> modes;
  if (c.mode == "max" || c.mode == "both") modes.push_back(MultiplexMode::max);
  if (c.mode == "expected" || c.mode == "both") modes.push_back(MultiplexMode::expected);
  if (constraints.empty()) throw UsageError("region: constraint must be 3d, 2d or both");
  if (modes.empty()) throw UsageError("region: mode must be max, expected or both");
  const ArrayConfig cfg = make_array(c.array);
  if (c.points < 2) throw UsageError("region: need at least two boundary points");
  for (double zs : c.source_heights) (void)RegionSpec(cfg, zs, c.k0, constraints.front(), modes.front());

  CsvWriter csv(out);
  csv.header({"Zs", "mode", "constraint", "Xr", "Yr"});
  SvgPlot plot("Spatial multiplexing region boundaries, K_0 = " + fmt(c.k0), "X_r (lambda)", "Y_r (lambda)");
  plot.equal_aspect();
  for (double zs : c.source_heights) {
    for (MultiplexMode mode : modes) {
      for (OrientationConstraint con : constraints) {
        const RegionSpec spec(cfg, zs, c.k0, con, mode);
        const char* mode_name = mode == MultiplexMode::max ? "max" : "expected";
        const char* con_name = con == OrientationConstraint::three_d ? "3D" : "2D";
        const RegionBoundary b = region_boundary(spec, c.points);
        if (!b.nonempty) {
          csv.row(zs, mode_name, con_name, "empty", "empty");
          log << "Z_s=" << fmt(zs) << " " << mode_name << " " << con_name << ": region is empty\n";
          continue;
        }
        // Closed loop through all four quadrants, starting and ending at (X_r(0), 0).
        const auto& q = b.points;
        const std::size_t n = q.size();
        Series trace{"Z_s=" + fmt(zs) + " " + mode_name + " " + con_name, {}, {}, mode == MultiplexMode::max};
        auto emit = [&](double x, double y) {
          csv.row(zs, mode_name, con_name, x, y);
          trace.x.push_back(x);
          trace.y.push_back(y);
        };
        for (std::size_t k = 0; k < n; ++k) emit(q[k].first, q[k].second);
        for (std::size_t k = n - 1; k-- > 0;) emit(neg(q[k].first), q[k].second);
        for (std::size_t k = 1; k < n; ++k) emit(neg(q[k].first), neg(q[k].second));
        for (std::size_t k = n - 1; k-- > 0;) emit(q[k].first, neg(q[k].second));
        plot.add(std::move(trace));
      }
    }
  }
  if (!c.svg.empty()) plot.save(c.svg);
}

void cmd_cdf(const CdfConfig& c, std::ostream& out, std::ostream& log) {
  struct Curve {
    OrientationConstraint constraint;
    MultiplexMode mode;
    DistributionKind dist;
  };
  const std::map<std::string, Curve> known{
      {"max3D", {OrientationConstraint::three_d, MultiplexMode::max, DistributionKind::uni3d}},
      {"max2D", {OrientationConstraint::two_d, MultiplexMode::max, DistributionKind::uni2d}},
      {"exp-uni3D", {OrientationConstraint::three_d, MultiplexMode::expected, DistributionKind::uni3d}},
      {"exp-uni2D", {OrientationConstraint::two_d, MultiplexMode::expected, DistributionKind::uni2d}},
  };
  if (c.curves.empty()) throw UsageError("cdf: the curve list is empty");
  for (const auto& name : c.curves)
    if (!known.count(name)) throw UsageError("cdf: unknown curve " + name);
  if (c.methods.empty()) throw UsageError("cdf: the method list is empty");
  for (const auto& m : c.methods)
    if (m != "asymptotic" && m != "exact") throw UsageError("cdf: method must be asymptotic or exact");
  const ArrayConfig cfg = make_array(c.array);

  if (!(c.grid_step > 0.0)) throw UsageError("cdf: grid step must be positive");
  if (c.search_grid < 64) throw UsageError("cdf: search grid must be at least 64");
  (void)RegionSpec(cfg, c.source_height, c.k0, OrientationConstraint::three_d, MultiplexMode::max);

  CdfOptions options;
  options.expectation_draws = c.draws;
  options.search.grid_n = c.search_grid;
  options.threads = c.threads;

  CsvWriter csv(out);
  csv.header({"curve", "method", "K_value", "cdf"});
  std::optional<Output> ks_target;
  std::optional<CsvWriter> ks_csv;
  if (!c.summary.empty()) {
    ks_target.emplace(c.summary, log);
    ks_csv.emplace(ks_target->stream());
    ks_csv->header({"curve", "ks_distance", "n_asymptotic", "n_exact"});
  }
  SvgPlot plot("Empirical CDFs of K over the multiplexing regions", "K", "CDF");

  for (const auto& name : c.curves) {
    const Curve& curve = known.at(name);
    const RegionSpec spec(cfg, c.source_height, c.k0, curve.constraint, curve.mode);
    const OrientationDistribution dist{curve.dist, c.seed, 0};
    std::map<std::string, CdfResult> results;
    for (const auto& m : c.methods) {
      const CdfMethod method = m == "exact" ? CdfMethod::exact : CdfMethod::asymptotic;
      const CdfResult r = cdf_simulation(spec, c.grid_step, dist, method, options);
      if (r.empty) {
        log << name << ": region is empty\n";
        continue;
      }
      Series s{name + " " + m, {}, {}, m == "exact"};
      const auto& v = r.cdf.values;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i + 1 < v.size() && v[i + 1] == v[i]) continue;  // one row per distinct value
        csv.row(name, m, v[i], r.cdf.fractions[i]);
        s.x.push_back(v[i]);
        s.y.push_back(r.cdf.fractions[i]);
      }
      plot.add(std::move(s));
      results.emplace(m, r);
    }
    if (results.count("asymptotic") && results.count("exact")) {
      const CdfResult& a = results.at("asymptotic");
      const CdfResult& e = results.at("exact");
      const double ks = ks_distance(a.cdf, e.cdf);
      log << "KS " << name << " " << fmt(ks) << " (n_asymptotic=" << a.cdf.size()
                  << ", n_exact=" << e.cdf.size() << ")\n";
      if (ks_csv) ks_csv->row(name, ks, a.cdf.size(), e.cdf.size());
    }
  }
  if (!c.svg.empty()) plot.save(c.svg);
}

void cmd_critical(const CriticalConfig& c, std::ostream& out, std::ostream& /*log*/) {
  const ArrayConfig cfg = make_array(c.array);
  for (double t_pi : c.theta) angle_from_pi_units(t_pi);
  CsvWriter csv(out);
  csv.header({"quantity", "theta_over_pi", "value"});
  const CriticalAngles& ca = critical_angles();
  csv.row("theta_z1", "", ca.z1 / kPi);
  csv.row("theta_z2", "", ca.z2 / kPi);
  csv.row("theta_x", "", ca.x / kPi);
  for (double t_pi : c.theta) {
    const double theta = angle_from_pi_units(t_pi);
    for (const PiecewiseBandwidthModel& m : {build_model_z(theta, cfg), build_model_x(theta, cfg)}) {
      const std::string family = m.family == ModelFamily::z ? "z" : "x";
      for (std::size_t i = 0; i < m.breakpoints.size(); ++i) {
        const std::string name = "R_" + family + segment_id(m.segments[i].kind) + segment_id(m.segments[i + 1].kind) +
                                 "_over_Ls";
        csv.row(name, t_pi, m.breakpoints[i] / cfg.source_length());
      }
    }
  }
}

}  // namespace losdof::cli
