#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace jwm {

/// Monotone piecewise-cubic interpolant (Fritsch-Carlson PCHIP).
///
/// Given strictly increasing x and monotone non-decreasing y, the
/// interpolant preserves monotonicity, so it is safe for CDF and
/// quantile tables.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    slope_.assign(n, 0.0);
    if (n < 2) return;
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (d[i - 1] * d[i] <= 0.0) {
        slope_[i] = 0.0;
      } else {
        // harmonic mean weighted by interval lengths
        const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
        const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
        slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
      }
    }
    // clamp endpoint slopes (Fritsch-Carlson condition)
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (d[i] == 0.0) {
        slope_[i] = slope_[i + 1] = 0.0;
      } else {
        const double a = slope_[i] / d[i];
        const double b = slope_[i + 1] / d[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
          const double t = 3.0 / std::sqrt(s);
          slope_[i] = t * a * d[i];
          slope_[i + 1] = t * b * d[i];
        }
      }
    }
  }

  bool empty() const { return x_.size() < 2; }
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }

  double operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    std::size_t lo = 0, hi = x_.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (x_[mid] <= x ? lo : hi) = mid;
    }
    const double h = x_[lo + 1] - x_[lo];
    const double t = (x - x_[lo]) / h;
    const double y0 = y_[lo], y1 = y_[lo + 1];
    const double m0 = slope_[lo] * h, m1 = slope_[lo + 1] * h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * m1;
  }

 private:
  std::vector<double> x_, y_, slope_;
};

}  // namespace jwm
