#include "jwm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "jwm/error.hpp"
#include "jwm/quadrature.hpp"

namespace jwm {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;
constexpr int kCdfNodes = 4096;

double std_normal_pdf(double u) { return std::exp(-0.5 * u * u) / kSqrt2Pi; }
double std_normal_cdf(double u) { return 0.5 * std::erfc(-u * M_SQRT1_2); }

}  // namespace

Spectrum Spectrum::gaussian(double center, double spread) {
  return gaussian(center, spread, std::max(0.0, center - 6.0 * spread),
                  center + 6.0 * spread);
}

Spectrum Spectrum::gaussian(double center, double spread, double lo, double hi) {
  if (!(center > 0.0) || !(spread > 0.0))
    throw DomainError(ErrorCode::ConfigInvalid,
                      "gaussian spectrum requires center > 0 and spread > 0");
  if (!(lo >= 0.0) || !(lo < hi))
    throw DomainError(ErrorCode::ConfigInvalid,
                      "spectrum support requires 0 <= lo < hi");
  Spectrum s;
  s.kind_ = Kind::Gaussian;
  s.nominal_center_ = center;
  s.nominal_spread_ = spread;
  s.lo_ = lo;
  s.hi_ = hi;
  s.finalize();
  return s;
}

Spectrum Spectrum::tabulated(std::vector<double> grid,
                             std::vector<double> values) {
  if (grid.size() < 2 || grid.size() != values.size())
    throw DomainError(ErrorCode::ConfigInvalid,
                      "tabulated spectrum needs >= 2 grid points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError(ErrorCode::ConfigInvalid,
                        "tabulated grid must be strictly increasing");
    if (!(values[i] >= 0.0))
      throw DomainError(ErrorCode::ConfigInvalid,
                        "tabulated density must be non-negative");
  }
  if (!(grid.front() >= 0.0))
    throw DomainError(ErrorCode::ConfigInvalid,
                      "tabulated frequencies must be non-negative");
  Spectrum s;
  s.kind_ = Kind::Tabulated;
  s.lo_ = grid.front();
  s.hi_ = grid.back();
  s.grid_ = std::move(grid);
  s.values_ = std::move(values);
  s.finalize();
  s.nominal_center_ = s.mean_;
  s.nominal_spread_ = s.sd_;
  return s;
}

Spectrum Spectrum::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(ErrorCode::IoError, "cannot open " + path);
  std::vector<double> grid, values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double w, v;
    if (!(ss >> w)) continue;  // blank or comment-only line
    if (!(ss >> v))
      throw DomainError(ErrorCode::ParseError,
                        path + ":" + std::to_string(lineno) +
                            ": expected two columns (frequency density)");
    std::string rest;
    if (ss >> rest)
      throw DomainError(ErrorCode::ParseError,
                        path + ":" + std::to_string(lineno) +
                            ": trailing content '" + rest + "'");
    grid.push_back(w);
    values.push_back(v);
  }
  try {
    return tabulated(std::move(grid), std::move(values));
  } catch (const DomainError& e) {
    throw DomainError(ErrorCode::ParseError, path + ": " + e.what());
  }
}

double Spectrum::density(double omega) const {
  if (omega < lo_ || omega > hi_) return 0.0;
  if (kind_ == Kind::Gaussian) {
    const double u = (omega - nominal_center_) / nominal_spread_;
    return std_normal_pdf(u) / (nominal_spread_ * norm_);
  }
  // piecewise-linear table
  auto it = std::upper_bound(grid_.begin(), grid_.end(), omega);
  if (it == grid_.begin()) return values_.front();
  if (it == grid_.end()) return values_.back();
  const std::size_t i = static_cast<std::size_t>(it - grid_.begin()) - 1;
  const double t = (omega - grid_[i]) / (grid_[i + 1] - grid_[i]);
  return values_[i] + t * (values_[i + 1] - values_[i]);
}

double Spectrum::cdf(double omega) const {
  if (omega <= lo_) return 0.0;
  if (omega >= hi_) return 1.0;
  if (kind_ == Kind::Gaussian) {
    const double a = (lo_ - nominal_center_) / nominal_spread_;
    const double u = (omega - nominal_center_) / nominal_spread_;
    return (std_normal_cdf(u) - std_normal_cdf(a)) / norm_;
  }
  return std::clamp(cdf_interp_(omega), 0.0, 1.0);
}

double Spectrum::sample(RngStream& rng) const {
  return quantile_(rng.next_double());
}

Spectrum Spectrum::scaled(double lambda) const {
  if (!(lambda > 0.0))
    throw DomainError(ErrorCode::ConfigInvalid, "scale must be positive");
  if (kind_ == Kind::Gaussian)
    return gaussian(lambda * nominal_center_, lambda * nominal_spread_,
                    lambda * lo_, lambda * hi_);
  std::vector<double> g(grid_);
  for (double& w : g) w *= lambda;
  return tabulated(std::move(g), values_);
}

void Spectrum::finalize() {
  if (kind_ == Kind::Gaussian) {
    const double mu = nominal_center_, sg = nominal_spread_;
    const double a = (lo_ - mu) / sg, b = (hi_ - mu) / sg;
    norm_ = std_normal_cdf(b) - std_normal_cdf(a);
    if (!(norm_ > 0.0))
      throw DomainError(ErrorCode::ConfigInvalid,
                        "spectrum support carries no probability mass");
    // moments by quadrature over the support, in standardized coordinates
    const double z = norm_;
    auto pdf = [&](double u) { return std_normal_pdf(u) / z; };
    const double um = quad::value([&](double u) { return u * pdf(u); }, a, b,
                                  1e-15, 1e-13);
    const double uv =
        quad::value([&](double u) { return (u - um) * (u - um) * pdf(u); }, a,
                    b, 1e-15, 1e-13);
    mean_ = mu + sg * um;
    var_ = sg * sg * uv;
    sd_ = std::sqrt(var_);
    // quantile table on uniform nodes (analytic CDF values); flat runs in
    // the far tails collapse to a single node
    std::vector<double> xs, fs;
    xs.reserve(kCdfNodes);
    fs.reserve(kCdfNodes);
    const double ca = std_normal_cdf(a);
    double prev = -1.0;
    for (int i = 0; i < kCdfNodes; ++i) {
      const double u = a + (b - a) * i / (kCdfNodes - 1);
      double f = std::clamp((std_normal_cdf(u) - ca) / z, 0.0, 1.0);
      if (i == 0) f = 0.0;
      if (i == kCdfNodes - 1) f = 1.0;
      if (f > prev) {
        xs.push_back(mu + sg * u);
        fs.push_back(f);
        prev = f;
      }
    }
    quantile_ = MonotoneCubic(fs, xs);
    return;
  }

  // Tabulated: piecewise-linear density => exact segment integrals.
  const std::size_t n = grid_.size();
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    mass += 0.5 * (values_[i] + values_[i + 1]) * (grid_[i + 1] - grid_[i]);
  if (!(mass > 0.0))
    throw DomainError(ErrorCode::ConfigInvalid,
                      "tabulated density integrates to zero");
  for (double& v : values_) v /= mass;
  norm_ = 1.0;
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double x0 = grid_[i], x1 = grid_[i + 1];
    const double y0 = values_[i], y1 = values_[i + 1];
    const double h = x1 - x0;
    // integrals of x^k * (linear density) over [x0, x1]
    m1 += h * (x0 * (2 * y0 + y1) + x1 * (y0 + 2 * y1)) / 6.0;
    m2 += h *
          (y0 * (3 * x0 * x0 + 2 * x0 * x1 + x1 * x1) +
           y1 * (x0 * x0 + 2 * x0 * x1 + 3 * x1 * x1)) /
          12.0;
  }
  mean_ = m1;
  var_ = std::max(0.0, m2 - m1 * m1);
  sd_ = std::sqrt(var_);
  if (!(sd_ > 0.0))
    throw DomainError(ErrorCode::ConfigInvalid,
                      "tabulated density has zero spread");

  // exact piecewise-quadratic CDF evaluated on uniform nodes
  std::vector<double> node_cdf(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    node_cdf[i + 1] = node_cdf[i] + 0.5 * (values_[i] + values_[i + 1]) *
                                        (grid_[i + 1] - grid_[i]);
  auto cdf_exact = [&](double x) {
    auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    if (it == grid_.begin()) return 0.0;
    if (it == grid_.end()) return 1.0;
    const std::size_t i = static_cast<std::size_t>(it - grid_.begin()) - 1;
    const double t = x - grid_[i];
    const double slope = (values_[i + 1] - values_[i]) / (grid_[i + 1] - grid_[i]);
    return node_cdf[i] + values_[i] * t + 0.5 * slope * t * t;
  };
  std::vector<double> xs, fs;
  xs.reserve(kCdfNodes);
  fs.reserve(kCdfNodes);
  double prev = -1.0;
  for (int i = 0; i < kCdfNodes; ++i) {
    const double x = lo_ + (hi_ - lo_) * i / (kCdfNodes - 1);
    double f = std::clamp(cdf_exact(x), 0.0, 1.0);
    if (i == 0) f = 0.0;
    if (i == kCdfNodes - 1) f = 1.0;
    if (f > prev) {  // drop flat runs (zero-density stretches)
      xs.push_back(x);
      fs.push_back(f);
      prev = f;
    }
  }
  cdf_interp_ = MonotoneCubic(xs, fs);
  quantile_ = MonotoneCubic(fs, xs);
}

}  // namespace jwm
