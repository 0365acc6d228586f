#pragma once

#include <vector>

#include "etpa/molecule.hpp"
#include "etpa/pdc.hpp"
#include "etpa/scan.hpp"

namespace etpa::signal_spectral {

// Frequency-resolved signal model for a source with a single transverse
// Schmidt mode (Q_m == Q_p); the spectral axis carries all multimode
// structure.
struct SpectralSignalConfig {
  pdc::PdcParams pdc;
  molecule::MoleculeParams mol;
  double mode_tail_epsilon = 1e-9;  // neglected Schmidt-amplitude tail
  double sum_epsilon = 1e-8;        // anti-diagonal termination threshold

  void validate() const;
};

// Overlap of displaced Hermite functions reduced to a single associated
// Laguerre term: sqrt(n!/m!) dw^(m-n) L_n^(m-n)(dw^2) exp(-dw^2/2), m >= n.
double overlap_hermite(int m, int n, double delta_w);

struct SignalPoint {
  double p_corr = 0.0;
  double p_unc = 0.0;
  double total = 0.0;
  double r_rel = 0.0;
  double mean_n = 0.0;
};

// Precomputes gain-independent Lorentzian-weighted mode-overlap tables for
// one (detuning, linewidth) pair; evaluating a gain is then a cheap double
// sum.  Safe to share across threads once built.
class SpectralEvaluator {
 public:
  explicit SpectralEvaluator(const SpectralSignalConfig& cfg);

  int n_modes() const { return n_modes_; }
  const SpectralSignalConfig& config() const { return cfg_; }

  // excitation probability densities at transverse offset (x, y)
  double p_corr(double gain, double x = 0.0, double y = 0.0) const;
  double p_unc(double gain, double x = 0.0, double y = 0.0) const;
  SignalPoint point(double gain) const;  // densities at the beam centre

  // total excitation rate for a sample slab
  double rate(double gain, const molecule::SampleParams& s) const;

 private:
  double weighted_sum_corr(double gain) const;
  double weighted_sum_unc(double gain) const;

  SpectralSignalConfig cfg_;
  double zeta_ = 0.0;      // spectral Schmidt parameter
  double r0_ = 0.0;        // leading Schmidt coefficient sqrt(1 - zeta^2)
  double scale_ = 1.0;     // sqrt(2 Omega_m Omega_p)
  int n_modes_ = 0;        // highest retained mode index
  std::vector<double> icorr_;  // packed lower triangle of corr overlaps
  std::vector<double> junc_;   // packed lower triangle of unc overlaps
};

// Sharp-line (gamma_fg -> 0) resonant limits; throw when detuned.
double p_corr_narrow(const SpectralSignalConfig& cfg, double gain,
                     double x = 0.0, double y = 0.0);
double p_unc_narrow(const SpectralSignalConfig& cfg, double gain,
                    double x = 0.0, double y = 0.0);

// p_corr / p_unc with the 0-denominator cases mapped to inf (and NaN at 0/0)
double r_rel(double p_corr, double p_unc);

// Convenience wrapper building a throwaway evaluator.
double rate_tpa(const SpectralSignalConfig& cfg, const molecule::SampleParams& s,
                double gain);

// detuning sweep at fixed gain; columns p_corr, p_unc, total, r_rel
scan::ScanResult resonance_scan(const SpectralSignalConfig& cfg, double gain,
                                const std::vector<double>& detunings, int jobs = 1);

// photon-number sweep at fixed resonance; exact=false uses the sharp-line
// formulas; columns gain, p_corr, p_unc, total, r_rel
scan::ScanResult intensity_scan(const SpectralSignalConfig& cfg,
                                const std::vector<double>& mean_ns, bool exact,
                                int jobs = 1);

// linewidth sweep at fixed mean photon number; columns p_corr, p_unc, total,
// r_rel
scan::ScanResult broadening_scan(const SpectralSignalConfig& cfg, double mean_n,
                                 const std::vector<double>& gammas, int jobs = 1);

}  // namespace etpa::signal_spectral
