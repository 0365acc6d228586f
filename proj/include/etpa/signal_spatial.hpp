#pragma once

#include <vector>

#include "etpa/molecule.hpp"
#include "etpa/pdc.hpp"
#include "etpa/scan.hpp"

namespace etpa::signal_spatial {

// Spatially resolved signal model for a source with a single spectral
// Schmidt mode (Omega_m == Omega_p); the transverse axes carry all multimode
// structure.
struct SpatialSignalConfig {
  pdc::PdcParams pdc;
  molecule::MoleculeParams mol;
  double mode_tail_epsilon = 1e-9;  // neglected Schmidt-amplitude tail

  void validate() const;
};

// Spectral factor of every spatial signal: the Lorentzian line folded with
// the single-mode sum-frequency Gaussian (a Voigt profile value).
double spec_overlap(const SpatialSignalConfig& cfg);

struct IntegratedSignal {
  double rate_corr = 0.0;
  double rate_unc = 0.0;
  double rate_total = 0.0;
};

// Precomputes the transverse mode tables (gain independent); per-gain
// evaluations are cheap sums.  Safe to share across threads once built.
class SpatialEvaluator {
 public:
  explicit SpatialEvaluator(const SpatialSignalConfig& cfg);

  int n_modes() const { return n_modes_; }
  const SpatialSignalConfig& config() const { return cfg_; }

  // excitation probability densities at transverse offset (x, y)
  double p_corr(double gain, double x, double y) const;
  double p_unc(double gain, double x, double y) const;

  // density integrated over the transverse plane, as a sample-slab rate
  IntegratedSignal integrated(double gain, const molecule::SampleParams& s) const;

 private:
  double mode_sum(double gain, double x, double y, bool alternating) const;
  double quartic_trace(const std::vector<double>& w) const;

  SpatialSignalConfig cfg_;
  double zeta_ = 0.0;   // transverse Schmidt parameter (per axis)
  double spec_ = 0.0;   // cached spec_overlap value
  int n_modes_ = 0;     // per-axis mode cap
  std::vector<double> vtab_;  // (n+1)^2 matrix of squared-mode overlaps
};

// density profile along x at y = 0; columns p_corr, p_unc, total
scan::ScanResult profile_scan(const SpatialSignalConfig& cfg, double gain,
                              const std::vector<double>& xs, int jobs = 1);

// integrated rates against mean photon number; columns gain, rate_corr,
// rate_unc, rate_total
scan::ScanResult integrated_scan(const SpatialSignalConfig& cfg,
                                 const molecule::SampleParams& s,
                                 const std::vector<double>& mean_ns, int jobs = 1);

}  // namespace etpa::signal_spatial
