#include "losdof/ecdf.hpp"

#include <algorithm>
#include <cmath>

#include "losdof/errors.hpp"

namespace losdof {

double EmpiricalCdf::operator()(double x) const {
  if (values.empty()) return 0.0;
  const auto it = std::upper_bound(values.begin(), values.end(), x);
  return static_cast<double>(it - values.begin()) / static_cast<double>(values.size());
}

EmpiricalCdf make_ecdf(std::vector<double> samples) {
  for (double s : samples)
    if (std::isnan(s)) throw DomainError("make_ecdf: NaN sample");
  std::sort(samples.begin(), samples.end());
  EmpiricalCdf out;
  out.fractions.resize(samples.size());
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out.fractions[i] = static_cast<double>(i + 1) / n;
  out.values = std::move(samples);
  return out;
}

double ks_distance(const EmpiricalCdf& f, const EmpiricalCdf& g) {
  if (f.empty() && g.empty()) return 0.0;
  if (f.empty() || g.empty()) return 1.0;
  // Both CDFs are step functions; the supremum is attained at a sample of either.
  double d = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  const double nf = static_cast<double>(f.size());
  const double ng = static_cast<double>(g.size());
  while (i < f.size() || j < g.size()) {
    double x;
    if (j == g.size() || (i < f.size() && f.values[i] <= g.values[j]))
      x = f.values[i];
    else
      x = g.values[j];
    while (i < f.size() && f.values[i] <= x) ++i;
    while (j < g.size() && g.values[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nf - static_cast<double>(j) / ng));
  }
  return d;
}

}  // namespace losdof
