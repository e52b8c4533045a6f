#pragma once

#include <array>
#include <cstdint>

#include "jwm/dataset.hpp"
#include "jwm/spectrum.hpp"

namespace jwm {

/// Physical and nuisance parameters of the two-port outcome model
///
///   p_q(omega; tau, phi) = 1/2 p0(omega) [1 + q e^{-eps^2/2} cos(phi - omega tau)]
///
/// phi is the physical alignment angle; the phase at the carrier is
/// phi - omega0 tau. The model is intended for |spread * tau| << 1 and
/// omega_max |tau| < 1; larger values are accepted here and guarded by
/// the individual estimators.
struct ModelParams {
  double tau = 0.0;          // time delay [s], may be negative or zero
  double phi = 0.0;          // alignment angle [rad]
  double epsilon = 0.0;      // alignment-fluctuation amplitude [rad], >= 0
  double omega_noise = 0.0;  // readout-noise scale [rad/s], >= 0
  SpectrumPtr spectrum;

  void validate() const;  // throws ConfigInvalid on bad fields
  /// Interference visibility e^{-eps^2/2}.
  double visibility() const;
  /// Dimensionless delay theta = spread * tau.
  double theta() const { return spectrum->spread() * tau; }
};

/// Outcome probability density p_q(omega) [1/(rad/s)]; zero outside the
/// spectrum support.
double port_density(const ModelParams& m, int q, double omega);

/// Integrated port probability P_q (adaptive quadrature; P_+ + P_- = 1
/// within 1e-10).
double port_probability(const ModelParams& m, int q);

/// Split-detector cell probabilities p_rq by exact quadrature: the port
/// density composed with Gaussian readout smearing of scale omega_noise
/// applied to the recorded frequency, thresholded at the spectrum mean.
/// Cell order: (r,q) = (+,+), (+,-), (-,+), (-,-).
std::array<double, 4> split_probabilities_exact(const ModelParams& m);

/// Second-order closed form for the split-detector cells on a Gaussian
/// spectrum, with phi measured at the carrier (the constant carrier phase
/// omega0 tau is absorbed into phi):
///
///   p_rq = 1/4 [1 + q e^{-eps^2/2} (1 - (spread tau)^2/2) cos(phi)]
///        + rq e^{-eps^2/2} spread tau / (2 sqrt(2 pi (1 + (omega_noise/spread)^2))) sin(phi)
///
/// Throws OutsideRegime if any cell comes out negative.
std::array<double, 4> split_probabilities_paper(const ModelParams& m);

struct SampleOptions {
  bool smear_spectrometer = false;  // apply readout smearing to recorded omega
  bool histogram = false;           // bin records instead of storing them
  double hist_bin_factor = 0.01;    // bin width in units of the spectrum spread
  int threads = 1;                  // results are independent of this value
};

/// Monte Carlo photon generator. Per photon: draw omega ~ p0, draw
/// phi' ~ Normal(phi, eps^2), draw the port with P(q=+1) =
/// (1 + cos(phi' - omega tau))/2; in split mode threshold
/// omega + Normal(0, omega_noise^2) at the spectrum mean. Photons are
/// generated in fixed-size chunks with substreams derived from
/// (seed, chunk), so output is a pure function of (params, mode, n, seed).
DetectionDataset sample_photons(const ModelParams& m, DetectionMode mode,
                                std::uint64_t n, std::uint64_t seed,
                                const SampleOptions& opt = {});

}  // namespace jwm
