#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace losdof::cli {

// Lengths are in wavelengths and angles in units of pi throughout.

struct ArrayOptions {
  double source_length = 1000.0;
  double receiver_length = 20.0;
  double wavelength = 1.0;  ///< meters; only used for unit annotations
  double min_separation = 10.0;
};

struct BandwidthConfig {
  ArrayOptions array;
  std::vector<double> theta{0.125, 0.25, 0.375, 0.5};
  std::vector<double> radii;  ///< R / L_s; overrides the log range when set
  double r_min = 0.01;
  double r_max = 100.0;
  std::size_t points = 200;
  std::string orientation = "z";  ///< z, x or general
  std::vector<double> direction;  ///< LCS direction for general
  std::string out = "-";
  std::string svg;
};

struct ErrorMapConfig {
  ArrayOptions array;
  std::string family = "z";
  std::string variant = "multi";
  double r_min = 0.01;
  double r_max = 5.0;
  std::size_t r_points = 200;
  std::size_t theta_points = 200;
  std::string out = "-";
  std::string svg;
};

struct RegionConfig {
  ArrayOptions array;
  std::vector<double> source_heights{4500.0};
  double k0 = 1.0;
  std::string constraint = "both";  ///< 3d, 2d or both
  std::string mode = "both";        ///< max, expected or both
  std::size_t points = 200;
  std::string out = "-";
  std::string svg;
};

struct CdfConfig {
  ArrayOptions array;
  double source_height = 4500.0;
  double k0 = 1.0;
  double grid_step = 50.0;
  std::uint64_t seed = 1;
  std::size_t draws = 1000;
  std::size_t search_grid = 64;
  std::vector<std::string> curves{"max3D", "max2D", "exp-uni3D", "exp-uni2D"};
  std::vector<std::string> methods{"asymptotic", "exact"};
  std::size_t threads = 0;
  std::string out = "-";
  std::string summary;  ///< optional KS CSV
  std::string svg;
};

struct CriticalConfig {
  ArrayOptions array;
  std::vector<double> theta{0.125, 0.25, 0.375, 0.5};
  std::string out = "-";
};

// Each command writes its CSV table to `out` and notes to `log`. The caller resolves the `out`
// path; cmd_cdf also prints one KS line per curve to `log`.
void cmd_bandwidth(const BandwidthConfig& cfg, std::ostream& out, std::ostream& log);
void cmd_errormap(const ErrorMapConfig& cfg, std::ostream& out, std::ostream& log);
void cmd_region(const RegionConfig& cfg, std::ostream& out, std::ostream& log);
void cmd_cdf(const CdfConfig& cfg, std::ostream& out, std::ostream& log);
void cmd_critical(const CriticalConfig& cfg, std::ostream& out, std::ostream& log);

/// Prints the error and maps it to an exit code: 2 for usage and domain errors, 3 for the rest.
int report_failure(std::exception_ptr error, std::ostream& err);

/// Full command line, including argv[0]. Returns the process exit code:
/// 0 success, 2 usage error, 3 computational error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace losdof::cli
