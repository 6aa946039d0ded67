#include "cli/csv.hpp"

#include <cmath>

namespace losdof::cli {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void CsvWriter::header(std::initializer_list<std::string_view> names) {
  bool first = true;
  for (auto n : names) emit(n, first);
  out_ << '\n';
}

Output::Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file_) throw UsageError("cannot open " + path + " for writing");
}

}  // namespace losdof::cli
