#pragma once

#include <array>

namespace etpa::pdc {

// Double-Gaussian downconversion source.  Omega_p / Q_p are the pump
// bandwidth and transverse pump width and double as the internal frequency
// and momentum units (both default to 1); Omega_m / Q_m are the
// difference-variable widths.  omega_p is the pump carrier frequency, only
// ever used relative to the molecular resonance.
struct PdcParams {
  double omega_p = 100.0;
  double Omega_p = 1.0;
  double Omega_m = 1.0;
  double Q_p = 1.0;
  double Q_m = 1.0;
  double gain = 0.0;  // collective gain Gamma
  double f_rep = 1.0; // pulse repetition rate

  void validate() const;  // throws std::invalid_argument on bad fields
  double pump_area() const;  // A_p = (2 pi)^2 / Q_p^2
};

// Geometric Schmidt spectrum of the double-Gaussian amplitude.  zeta values
// live in [0,1); n_t_max / n_xy_max are the smallest truncation orders whose
// neglected weight stays below truncation_epsilon.
struct SchmidtSpectrum {
  double zeta_t = 0.0;
  double zeta_q = 0.0;
  int n_t_max = 0;
  int n_xy_max = 0;
  double truncation_epsilon = 1e-9;
};

SchmidtSpectrum schmidt_spectrum(const PdcParams& p, double epsilon = 1e-9);

// r_n for mode (n_t, n_x, n_y):
//   (1 - zeta_q^2) sqrt(1 - zeta_t^2) zeta_t^n_t zeta_q^(n_x + n_y)
double schmidt_coefficient(const SchmidtSpectrum& s, int n_t, int n_x, int n_y);

// K = K_t K_x K_y with K_t = (Omega_m/Omega_p + Omega_p/Omega_m)/2 etc.
double schmidt_number(const PdcParams& p);

// <N> = 2 sum_n sinh^2(r_n Gamma) over the full three-index spectrum.
double mean_photon_number(const PdcParams& p, double gain);

// <N> f_rep / A_p
double photon_flux_density(const PdcParams& p, double gain);

// Inverts mean_photon_number by bracketing + bisection (relative tolerance
// 1e-10).  n_target = 0 returns exactly 0.
double gain_for_photon_number(const PdcParams& p, double n_target);

double entanglement_time(const PdcParams& p);  // 2 pi / Omega_m
double entanglement_area(const PdcParams& p);  // (2 pi)^2 / Q_m^2

// Joint amplitude F_mom * F_spec at frequencies omega_s/omega_i and
// transverse momenta q_s/q_i (momenta relative to the beam axis).
double jsa_eval(const PdcParams& p, double omega_s, double omega_i,
                const std::array<double, 2>& q_s, const std::array<double, 2>& q_i);

// sqrt(1-zeta^2) sum_{n<=n_max} (s zeta)^n h_n(x) h_n(y) with s = -1 when
// alternating (the ordering with the sum variable squeezed harder), else +1.
double mehler_partial_sum(double zeta, double x, double y, int n_max, bool alternating);

}  // namespace etpa::pdc
