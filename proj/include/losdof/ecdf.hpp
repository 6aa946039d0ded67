#pragma once

#include <cstddef>
#include <vector>

namespace losdof {

/// Empirical CDF: sorted samples with cumulative fractions (i + 1) / n.
struct EmpiricalCdf {
  std::vector<double> values;
  std::vector<double> fractions;

  bool empty() const noexcept { return values.empty(); }
  std::size_t size() const noexcept { return values.size(); }
  /// Fraction of samples <= x.
  double operator()(double x) const;
};

EmpiricalCdf make_ecdf(std::vector<double> samples);

/// Two-sample Kolmogorov-Smirnov statistic sup_x |F(x) - G(x)|. Empty input gives 1 unless both are empty.
double ks_distance(const EmpiricalCdf& f, const EmpiricalCdf& g);

}  // namespace losdof
