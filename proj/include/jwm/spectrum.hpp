#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jwm/interp.hpp"
#include "jwm/rng.hpp"

namespace jwm {

/// Initial laser frequency distribution p0(omega).
///
/// A Spectrum is normalized over its truncation support [lo, hi] with
/// 0 <= lo < hi. `center()` and `spread()` are the mean and standard
/// deviation of the truncated density, recomputed at construction (for
/// a Gaussian truncated at the default 6 sigma they agree with the
/// nominal parameters to well below every test tolerance).
///
/// Immutable after construction; safe to share across threads. Sampling
/// draws from an explicit caller-owned RngStream via a 4096-node
/// inverse-CDF table with monotone cubic interpolation.
class Spectrum {
 public:
  enum class Kind { Gaussian, Tabulated };

  /// Gaussian spectrum truncated to [max(0, center - 6 spread), center + 6 spread].
  static Spectrum gaussian(double center, double spread);
  /// Gaussian with explicit truncation bounds, 0 <= lo < hi.
  static Spectrum gaussian(double center, double spread, double lo, double hi);
  /// Piecewise-linear density on a strictly increasing grid; values are
  /// renormalized at construction.
  static Spectrum tabulated(std::vector<double> grid, std::vector<double> values);
  /// Two-column text file: frequency [rad/s], unnormalized density.
  /// '#' starts a comment. Throws DomainError{ParseError} with the
  /// offending line number on malformed input.
  static Spectrum from_file(const std::string& path);

  Kind kind() const { return kind_; }
  double center() const { return mean_; }
  double spread() const { return sd_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }

  /// Normalized density [1/(rad/s)]; zero outside the support.
  double density(double omega) const;

  struct Moments {
    double mean;        // [rad/s]
    double variance;    // [rad^2/s^2]
    double second_raw;  // variance + mean^2
  };
  Moments moments() const { return {mean_, var_, var_ + mean_ * mean_}; }

  /// CDF of the truncated density.
  double cdf(double omega) const;

  /// One draw with law p0 (inverse-CDF table lookup).
  double sample(RngStream& rng) const;

  /// Support in standardized units u = (omega - center) / spread.
  double u_lo() const { return (lo_ - mean_) / sd_; }
  double u_hi() const { return (hi_ - mean_) / sd_; }
  /// Dimensionless density in u; integrates to 1 over [u_lo, u_hi].
  double density_u(double u) const { return sd_ * density(mean_ + sd_ * u); }

  /// All frequencies scaled by lambda > 0 (support, grid, moments follow).
  Spectrum scaled(double lambda) const;

  /// Nominal shape parameters (Gaussian kind; equal to center/spread requests).
  double nominal_center() const { return nominal_center_; }
  double nominal_spread() const { return nominal_spread_; }
  const std::vector<double>& table_grid() const { return grid_; }
  const std::vector<double>& table_values() const { return values_; }

 private:
  Spectrum() = default;
  void finalize();  // normalization, moments, inverse-CDF table

  Kind kind_ = Kind::Gaussian;
  double nominal_center_ = 0.0, nominal_spread_ = 0.0;
  double lo_ = 0.0, hi_ = 0.0;
  double norm_ = 1.0;                   // raw-density mass over support
  double mean_ = 0.0, var_ = 0.0, sd_ = 0.0;
  std::vector<double> grid_, values_;   // tabulated kind (values normalized)
  MonotoneCubic quantile_;              // cdf -> omega
  MonotoneCubic cdf_interp_;            // omega -> cdf
};

using SpectrumPtr = std::shared_ptr<const Spectrum>;

inline SpectrumPtr make_gaussian(double center, double spread) {
  return std::make_shared<const Spectrum>(Spectrum::gaussian(center, spread));
}
inline SpectrumPtr make_gaussian(double center, double spread, double lo,
                                 double hi) {
  return std::make_shared<const Spectrum>(
      Spectrum::gaussian(center, spread, lo, hi));
}

}  // namespace jwm
