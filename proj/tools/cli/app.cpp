#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/csv.hpp"
#include "losdof/errors.hpp"

namespace losdof::cli {
namespace {

void add_array_options(CLI::App* sub, ArrayOptions& a) {
  sub->add_option("--source-length", a.source_length, "Source array length L_s (wavelengths)")->capture_default_str();
  sub->add_option("--receiver-length", a.receiver_length, "Receiving array length L_r (wavelengths)")
      ->capture_default_str();
  sub->add_option("--wavelength", a.wavelength, "Wavelength in meters (unit annotation only)")->capture_default_str();
  sub->add_option("--min-separation", a.min_separation, "Minimum separation of the validity check (wavelengths)")
      ->capture_default_str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Pulls "--config FILE" out of the arguments and appends "--key value" for every key=value line
// whose key was not given on the command line. Blank lines, # comments and [section] lines are skipped.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  const std::vector<std::string> given(args.begin(), args.end());
  auto on_command_line = [&](const std::string& flag) {
    for (const auto& a : given)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw UsageError(path + ":" + std::to_string(number) + ": empty key");
    const std::string flag = "--" + key;
    if (on_command_line(flag)) continue;
    args.push_back(flag);
    args.push_back(value);
  }
  return args;
}

}  // namespace

int report_failure(std::exception_ptr error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << " (best estimate " << fmt(e.best_estimate()) << ")\n";
    return 3;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << "\n";
    return 3;
  } catch (...) {
    err << "computation failed\n";
    return 3;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line-of-sight spatial bandwidth, K numbers and multiplexing regions for linear arrays"};
  app.name("losdof");
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;  // consumed by expand_config; declared for --help
  app.add_option("--config", config_path, "key=value file with option defaults; command-line flags win");
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: LOSDOF_THREADS or hardware concurrency)");

  BandwidthConfig bw;
  auto* s_bw = app.add_subcommand("bandwidth", "Exact vs asymptotic center bandwidth over R and theta");
  add_array_options(s_bw, bw.array);
  s_bw->add_option("--theta", bw.theta, "Polar angles (units of pi)")->delimiter(',')->capture_default_str();
  s_bw->add_option("--r", bw.radii, "Explicit R / L_s values (overrides the range)")->delimiter(',');
  s_bw->add_option("--r-min", bw.r_min, "Smallest R / L_s")->capture_default_str();
  s_bw->add_option("--r-max", bw.r_max, "Largest R / L_s")->capture_default_str();
  s_bw->add_option("--points", bw.points, "Log-spaced R samples")->capture_default_str();
  s_bw->add_option("--orientation", bw.orientation, "z, x or general")->capture_default_str();
  s_bw->add_option("--direction", bw.direction, "LCS direction vx,vy,vz for general")->delimiter(',');
  s_bw->add_option("--out", bw.out, "CSV path, - for stdout")->capture_default_str();
  s_bw->add_option("--svg", bw.svg, "Optional SVG plot path");

  ErrorMapConfig em;
  auto* s_em = app.add_subcommand("errormap", "Relative error of the asymptotic model over (R, theta)");
  add_array_options(s_em, em.array);
  s_em->add_option("--family", em.family, "z or x")->capture_default_str();
  s_em->add_option("--variant", em.variant, "multi or dual")->capture_default_str();
  s_em->add_option("--r-min", em.r_min, "Smallest R / L_s")->capture_default_str();
  s_em->add_option("--r-max", em.r_max, "Largest R / L_s")->capture_default_str();
  s_em->add_option("--r-points", em.r_points, "Log-spaced R samples")->capture_default_str();
  s_em->add_option("--theta-points", em.theta_points, "Angles in (0, 1/2] (units of pi)")->capture_default_str();
  s_em->add_option("--out", em.out, "CSV path, - for stdout")->capture_default_str();
  s_em->add_option("--svg", em.svg, "Optional SVG heat map path");

  RegionConfig rg;
  auto* s_rg = app.add_subcommand("region", "Boundaries of the spatial multiplexing regions");
  add_array_options(s_rg, rg.array);
  s_rg->add_option("--zs", rg.source_heights, "Source heights Z_s (wavelengths)")->delimiter(',')
      ->capture_default_str();
  s_rg->add_option("--k0", rg.k0, "K number threshold K_0")->capture_default_str();
  s_rg->add_option("--constraint", rg.constraint, "3d, 2d or both")->capture_default_str();
  s_rg->add_option("--mode", rg.mode, "max, expected or both")->capture_default_str();
  s_rg->add_option("--points", rg.points, "Boundary samples per quadrant")->capture_default_str();
  s_rg->add_option("--out", rg.out, "CSV path, - for stdout")->capture_default_str();
  s_rg->add_option("--svg", rg.svg, "Optional SVG plot path");

  CdfConfig cd;
  auto* s_cd = app.add_subcommand("cdf", "CDFs of maximum / expected K over the multiplexing regions");
  add_array_options(s_cd, cd.array);
  s_cd->add_option("--zs", cd.source_height, "Source height Z_s (wavelengths)")->capture_default_str();
  s_cd->add_option("--k0", cd.k0, "K number threshold K_0")->capture_default_str();
  s_cd->add_option("--grid-step", cd.grid_step, "Ground grid spacing (wavelengths)")->capture_default_str();
  s_cd->add_option("--seed", cd.seed, "Seed of the orientation draws")->capture_default_str();
  s_cd->add_option("--draws", cd.draws, "Orientation draws per point for the exact expectation")
      ->capture_default_str();
  s_cd->add_option("--search-grid", cd.search_grid, "Zenith samples of the exhaustive search (>= 64)")
      ->capture_default_str();
  s_cd->add_option("--curves", cd.curves, "max3D, max2D, exp-uni3D, exp-uni2D")->delimiter(',')
      ->capture_default_str();
  s_cd->add_option("--methods", cd.methods, "asymptotic, exact")->delimiter(',')->capture_default_str();
  s_cd->add_option("--out", cd.out, "CSV path, - for stdout")->capture_default_str();
  s_cd->add_option("--summary", cd.summary, "Optional KS summary CSV path");
  s_cd->add_option("--svg", cd.svg, "Optional SVG plot path");

  CriticalConfig cr;
  auto* s_cr = app.add_subcommand("critical", "Critical angles and critical distances");
  add_array_options(s_cr, cr.array);
  s_cr->add_option("--theta", cr.theta, "Polar angles (units of pi)")->delimiter(',')->capture_default_str();
  s_cr->add_option("--out", cr.out, "CSV path, - for stdout")->capture_default_str();

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args));
    // CLI11 takes the arguments in reverse order, without the program name.
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*s_bw) {
      Output o(bw.out, out);
      cmd_bandwidth(bw, o.stream(), err);
    } else if (*s_em) {
      Output o(em.out, out);
      cmd_errormap(em, o.stream(), err);
    } else if (*s_rg) {
      Output o(rg.out, out);
      cmd_region(rg, o.stream(), err);
    } else if (*s_cd) {
      cd.threads = threads;
      Output o(cd.out, out);
      // KS lines land on stdout whenever the table is written to a file.
      cmd_cdf(cd, o.stream(), cd.out == "-" ? err : out);
    } else if (*s_cr) {
      Output o(cr.out, out);
      cmd_critical(cr, o.stream(), err);
    }
  } catch (...) {
    return report_failure(std::current_exception(), err);
  }
  return 0;
}

}  // namespace losdof::cli
