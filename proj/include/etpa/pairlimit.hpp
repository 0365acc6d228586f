#pragma once

#include <vector>

#include "etpa/molecule.hpp"
#include "etpa/pdc.hpp"

namespace etpa::pairlimit {

// Finite-linewidth efficiency factor x erfcx(x/sqrt2) at x = gamma_fg/Omega_p.
// Rises linearly from 0 and saturates at sqrt(2/pi).
double efficiency(double x);

// Spectral pair factor: Lorentzian lineshape folded with the squared
// sum-frequency marginal of the joint amplitude.  Closed form via the
// Faddeeva function, valid at any detuning.
double p_freq_closed(const pdc::PdcParams& p, const molecule::MoleculeParams& m);

// Same quantity by nested adaptive quadrature (outer sum frequency, inner
// marginalisation of the joint amplitude).  Cross-check for p_freq_closed.
double p_freq_numeric(const pdc::PdcParams& p, const molecule::MoleculeParams& m);

// Spatial pair factor delta_z Q_m^2 / (2 pi)
double r_spat(const pdc::PdcParams& p, const molecule::SampleParams& s);

// Entangled two-photon cross section sigma^2/(A_e T_e) * efficiency(gamma/Omega_p)
double sigma_e(const pdc::PdcParams& p, const molecule::MoleculeParams& m);

// gamma_fg -> 0 plateau of sigma_e: coupling / (2 Omega_p A_e T_e)
double sigma_e_gamma_zero(const pdc::PdcParams& p, const molecule::MoleculeParams& m);

// sigma_e swept over linewidths, other parameters fixed
std::vector<double> sigma_e_vs_gamma(const pdc::PdcParams& p,
                                     const molecule::MoleculeParams& m,
                                     const std::vector<double>& gammas);

// Pair-limit absorption rate m_0 f_rep gain^2 coupling / (2 pi)^2 * r_spat *
// p_freq; equals n_molecules * sigma_e * photon_flux_density at low gain.
double rate_low_gain(const pdc::PdcParams& p, const molecule::MoleculeParams& m,
                     const molecule::SampleParams& s, double gain);

}  // namespace etpa::pairlimit
