#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace illab {

// Iterated Aitken delta-squared; returns the last entry of the deepest pass.
// Steps at rounding level or with a vanishing second difference keep the
// latest value instead of dividing.
template <class S>
S aitken_limit(std::vector<S> x, int passes) {
  using R = decltype(std::abs(S{}));
  const R eps = std::numeric_limits<R>::epsilon();
  for (int p = 0; p < passes && x.size() >= 3; ++p) {
    std::vector<S> y;
    y.reserve(x.size() - 2);
    for (std::size_t k = 0; k + 2 < x.size(); ++k) {
      const S d1 = x[k + 1] - x[k];
      const S d2 = x[k + 2] - x[k + 1];
      const S dd = d2 - d1;
      const R mag = std::max(R(1), std::abs(x[k + 2]));
      if (std::abs(d2) <= 4 * eps * mag || std::abs(dd) <= R(1e-12) * std::abs(d2))
        y.push_back(x[k + 2]);
      else
        y.push_back(x[k + 2] - d2 * d2 / dd);
    }
    x = std::move(y);
  }
  return x.back();
}

// Last `window` consecutive steps never grow (relative slack 1e-6, values
// under `floor` count as zero).
inline bool tail_non_increasing(const std::vector<double>& steps, std::size_t window, double floor) {
  if (steps.size() < 2) return true;
  const std::size_t n = std::min(window, steps.size());
  for (std::size_t k = steps.size() - n + 1; k < steps.size(); ++k) {
    const double a = steps[k - 1] <= floor ? 0.0 : steps[k - 1];
    const double b = steps[k] <= floor ? 0.0 : steps[k];
    if (b > a * (1 + 1e-6)) return false;
  }
  return true;
}

// Same window, strictly shrinking unless already under `floor`.
inline bool tail_contracting(const std::vector<double>& steps, std::size_t window, double floor) {
  if (steps.size() < 2) return true;
  const std::size_t n = std::min(window, steps.size());
  for (std::size_t k = steps.size() - n + 1; k < steps.size(); ++k) {
    if (steps[k] <= floor) continue;
    if (!(steps[k] < steps[k - 1] * (1 - 1e-9))) return false;
  }
  return true;
}

}  // namespace illab
