#pragma once

#include "etpa/pdc.hpp"

namespace etpa::molecule {

// Two-photon absorber: final-state energy omega_fg, linewidth gamma_fg and
// the squared transition matrix element bundled into `coupling`.
struct MoleculeParams {
  double omega_fg = 100.0;
  double gamma_fg = 0.1;
  double coupling = 1.0;

  void validate() const;
};

// Homogeneous slab of absorbers: number density m_0, thickness delta_z.
struct SampleParams {
  double m_0 = 1.0;
  double delta_z = 1.0;

  void validate() const;
};

// m_0 * delta_z * A_p, the count illuminated by one pump spot
double n_molecules(const SampleParams& s, const pdc::PdcParams& p);

// sigma^2 = coupling / (2 gamma_fg)
double classical_tpa_cross_section(const MoleculeParams& m);

// Lorentzian final-state lineshape evaluated at total frequency omega_sum
double lineshape(const MoleculeParams& m, double omega_sum);

}  // namespace etpa::molecule
