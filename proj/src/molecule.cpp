#include "etpa/molecule.hpp"

#include <cmath>
#include <stdexcept>

#include "etpa/special.hpp"

namespace etpa::molecule {

void MoleculeParams::validate() const {
  if (!(gamma_fg > 0.0))
    throw std::invalid_argument("molecule: gamma_fg must be positive");
  if (!(coupling > 0.0))
    throw std::invalid_argument("molecule: coupling must be positive");
  if (!std::isfinite(omega_fg))
    throw std::invalid_argument("molecule: omega_fg must be finite");
}

void SampleParams::validate() const {
  if (!(m_0 > 0.0)) throw std::invalid_argument("sample: m_0 must be positive");
  if (!(delta_z > 0.0)) throw std::invalid_argument("sample: delta_z must be positive");
}

double n_molecules(const SampleParams& s, const pdc::PdcParams& p) {
  s.validate();
  return s.m_0 * s.delta_z * p.pump_area();
}

double classical_tpa_cross_section(const MoleculeParams& m) {
  m.validate();
  return 0.5 * m.coupling / m.gamma_fg;
}

double lineshape(const MoleculeParams& m, double omega_sum) {
  m.validate();
  return specfun::lorentzian(m.omega_fg - omega_sum, m.gamma_fg);
}

}  // namespace etpa::molecule
