#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jwm/spectrum.hpp"

namespace jwm {

enum class DetectionMode { Spectrometer, Split };

const char* mode_name(DetectionMode m);
DetectionMode mode_from_name(const std::string& name);

/// One detected photon in spectrometer mode.
struct PhotonRecord {
  int q;         // output port, +1 or -1
  double omega;  // recorded frequency [rad/s]
};

/// Split-detector cell index for outcome (r, q), r/q in {+1, -1}.
inline int split_cell(int r, int q) {
  return (r > 0 ? 0 : 2) + (q > 0 ? 0 : 1);
}

/// Binned per-port frequency counts (equivalent representation of a
/// spectrometer dataset for memory- and CPU-bound fits).
struct SpectrometerHistogram {
  double lo = 0.0, hi = 0.0;
  std::vector<double> plus, minus;  // counts per bin, ports q = +1 / -1

  std::size_t bins() const { return plus.size(); }
  double center(std::size_t b) const {
    return lo + (hi - lo) * (static_cast<double>(b) + 0.5) /
                    static_cast<double>(bins());
  }
};

struct DatasetMeta {
  std::uint64_t seed = 0;
  bool synthetic = false;
  bool exact = false;  // split cells hold probabilities, not counts
  double true_tau = 0.0, true_phi = 0.0;
  double true_epsilon = 0.0, true_omega_noise = 0.0;
  SpectrumPtr spectrum;  // a-priori spectrum (generation spectrum if synthetic)
};

/// Recorded photon outcomes.
///
/// Spectrometer mode stores per-photon (q, omega) records and/or a binned
/// histogram; split mode stores the four cell counts n_rq (fractional
/// values are allowed so that exact outcome probabilities can stand in
/// for an infinite-N dataset).
struct DetectionDataset {
  DetectionMode mode = DetectionMode::Spectrometer;
  std::vector<PhotonRecord> records;
  std::optional<SpectrometerHistogram> histogram;
  std::array<double, 4> counts{0.0, 0.0, 0.0, 0.0};
  double n_total = 0.0;
  DatasetMeta meta;

  double fraction(int r, int q) const { return counts[split_cell(r, q)] / n_total; }
  /// Port fractions f_q for q = +1, -1 (either mode).
  std::array<double, 2> port_fractions() const;

  /// Writes <prefix>.csv (spectrometer: `q,omega`; split: `r,q,count`)
  /// and a <prefix>.json metadata sidecar.
  void save(const std::string& prefix) const;
  /// Reads <prefix>.csv + <prefix>.json. Tabulated generation spectra are
  /// not embedded in the sidecar; pass `spectrum_file` to reattach one.
  static DetectionDataset load(const std::string& prefix,
                               const std::string& spectrum_file = "");
};

/// Exact-probability split dataset (the N = infinity substitution path).
DetectionDataset exact_split_dataset(const std::array<double, 4>& p_rq,
                                     SpectrumPtr spectrum);

}  // namespace jwm
