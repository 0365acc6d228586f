#include "etpa/pairlimit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "etpa/quadrature.hpp"
#include "etpa/special.hpp"

namespace etpa::pairlimit {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kSqrt2 = 1.4142135623730951;

// Sum-frequency marginal of the joint spectral amplitude, computed by
// adaptive quadrature over one leg frequency.
double marginal_numeric(const pdc::PdcParams& p, double sigma) {
  const double norm = std::pow(M_PI * p.Omega_m * p.Omega_p, -0.5);
  const double sum = sigma - p.omega_p;
  const double sum_part = std::exp(-0.25 * sum * sum / (p.Omega_p * p.Omega_p));
  if (sum_part == 0.0) return 0.0;
  auto f = [&](double w1) {
    const double d = 2.0 * w1 - sigma;
    return norm * sum_part * std::exp(-0.25 * d * d / (p.Omega_m * p.Omega_m));
  };
  specfun::QuadratureSpec qs;
  qs.domain = specfun::Domain::infinite;
  qs.rel_tol = 1e-11;
  qs.abs_tol = 1e-14 * std::sqrt(p.Omega_m / p.Omega_p);
  const double c = 0.5 * sigma, w = p.Omega_m;
  qs.breakpoints = {c - 8.0 * w, c - 2.0 * w, c, c + 2.0 * w, c + 8.0 * w};
  return specfun::integrate_adaptive(f, qs);
}

}  // namespace

double efficiency(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("efficiency: x must be >= 0");
  return x * specfun::erfcx(x / kSqrt2);
}

double p_freq_closed(const pdc::PdcParams& p, const molecule::MoleculeParams& m) {
  p.validate();
  m.validate();
  const double u = kSqrt2 * p.Omega_p;
  return (p.Omega_m / p.Omega_p) *
         specfun::faddeeva_re((m.omega_fg - p.omega_p) / u, m.gamma_fg / u);
}

double p_freq_numeric(const pdc::PdcParams& p, const molecule::MoleculeParams& m) {
  p.validate();
  m.validate();
  auto f = [&](double sigma) {
    const double a = marginal_numeric(p, sigma);
    return specfun::lorentzian(m.omega_fg - sigma, m.gamma_fg) * a * a;
  };
  specfun::QuadratureSpec qs;
  qs.domain = specfun::Domain::infinite;
  qs.rel_tol = 1e-9;
  qs.abs_tol = 1e-12 * (p.Omega_m / p.Omega_p);
  std::vector<double> bp;
  for (double k : {-32.0, -8.0, -2.0, -1.0, 0.0, 1.0, 2.0, 8.0, 32.0})
    bp.push_back(m.omega_fg + k * m.gamma_fg);
  for (double k : {-8.0, -3.0, 0.0, 3.0, 8.0}) bp.push_back(p.omega_p + k * p.Omega_p);
  std::sort(bp.begin(), bp.end());
  qs.breakpoints = bp;
  return specfun::integrate_adaptive(f, qs);
}

double r_spat(const pdc::PdcParams& p, const molecule::SampleParams& s) {
  p.validate();
  s.validate();
  return s.delta_z * p.Q_m * p.Q_m / kTwoPi;
}

double sigma_e(const pdc::PdcParams& p, const molecule::MoleculeParams& m) {
  const double sig2 = molecule::classical_tpa_cross_section(m);
  const double ae = pdc::entanglement_area(p);
  const double te = pdc::entanglement_time(p);
  return sig2 / (ae * te) * efficiency(m.gamma_fg / p.Omega_p);
}

double sigma_e_gamma_zero(const pdc::PdcParams& p, const molecule::MoleculeParams& m) {
  p.validate();
  m.validate();
  return 0.5 * m.coupling /
         (p.Omega_p * pdc::entanglement_area(p) * pdc::entanglement_time(p));
}

std::vector<double> sigma_e_vs_gamma(const pdc::PdcParams& p,
                                     const molecule::MoleculeParams& m,
                                     const std::vector<double>& gammas) {
  std::vector<double> out;
  out.reserve(gammas.size());
  molecule::MoleculeParams mm = m;
  for (double g : gammas) {
    mm.gamma_fg = g;
    out.push_back(sigma_e(p, mm));
  }
  return out;
}

double rate_low_gain(const pdc::PdcParams& p, const molecule::MoleculeParams& m,
                     const molecule::SampleParams& s, double gain) {
  if (!(gain >= 0.0)) throw std::invalid_argument("rate_low_gain: gain must be >= 0");
  return s.m_0 * p.f_rep * gain * gain * m.coupling / (kTwoPi * kTwoPi) *
         r_spat(p, s) * p_freq_closed(p, m);
}

}  // namespace etpa::pairlimit
