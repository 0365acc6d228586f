#include "etpa/pdc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "etpa/special.hpp"

namespace etpa::pdc {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr int kModeCap = 4096;          // hard cap per mode index
constexpr double kTermFloor = 1e-16;    // relative cutoff for adaptive sums

double sinh_sq(double x) {
  if (x < 350.0) {
    const double s = std::sinh(x);
    return s * s;
  }
  return 0.25 * std::exp(2.0 * x);  // sinh^2 ~ e^{2x}/4, may overflow to inf
}

// Smallest N with zeta^(2(N+1)) <= tail, i.e. neglected per-axis weight
// fraction below tail.
int weight_tail_order(double zeta, double tail) {
  if (zeta <= 0.0) return 0;
  const double n = 0.5 * std::log(tail) / std::log(zeta) - 1.0;
  int out = n <= 0.0 ? 0 : static_cast<int>(std::ceil(n));
  return out;
}

}  // namespace

void PdcParams::validate() const {
  if (!(Omega_p > 0.0) || !(Omega_m > 0.0))
    throw std::invalid_argument("pdc: bandwidths must be positive");
  if (!(Q_p > 0.0) || !(Q_m > 0.0))
    throw std::invalid_argument("pdc: transverse widths must be positive");
  if (!(gain >= 0.0)) throw std::invalid_argument("pdc: gain must be >= 0");
  if (!(f_rep > 0.0)) throw std::invalid_argument("pdc: f_rep must be positive");
  if (!std::isfinite(omega_p)) throw std::invalid_argument("pdc: omega_p must be finite");
}

double PdcParams::pump_area() const { return kTwoPi * kTwoPi / (Q_p * Q_p); }

SchmidtSpectrum schmidt_spectrum(const PdcParams& p, double epsilon) {
  p.validate();
  if (!(epsilon > 0.0) || epsilon >= 1.0)
    throw std::invalid_argument("schmidt_spectrum: epsilon must be in (0,1)");
  SchmidtSpectrum s;
  s.zeta_t = std::fabs(p.Omega_m - p.Omega_p) / (p.Omega_m + p.Omega_p);
  s.zeta_q = std::fabs(p.Q_m - p.Q_p) / (p.Q_m + p.Q_p);
  s.truncation_epsilon = epsilon;
  // Split the allowed loss over the three axes.
  s.n_t_max = weight_tail_order(s.zeta_t, epsilon / 3.0);
  s.n_xy_max = weight_tail_order(s.zeta_q, epsilon / 3.0);
  if (s.n_t_max > kModeCap || s.n_xy_max > kModeCap)
    throw std::runtime_error("schmidt_spectrum: mode count exceeds cap " +
                             std::to_string(kModeCap));
  return s;
}

double schmidt_coefficient(const SchmidtSpectrum& s, int n_t, int n_x, int n_y) {
  if (n_t < 0 || n_x < 0 || n_y < 0)
    throw std::invalid_argument("schmidt_coefficient: negative mode index");
  return (1.0 - s.zeta_q * s.zeta_q) * std::sqrt(1.0 - s.zeta_t * s.zeta_t) *
         std::pow(s.zeta_t, n_t) * std::pow(s.zeta_q, n_x + n_y);
}

double schmidt_number(const PdcParams& p) {
  p.validate();
  const double kt = 0.5 * (p.Omega_m / p.Omega_p + p.Omega_p / p.Omega_m);
  const double kq = 0.5 * (p.Q_m / p.Q_p + p.Q_p / p.Q_m);
  return kt * kq * kq;
}

double mean_photon_number(const PdcParams& p, double gain) {
  p.validate();
  if (!(gain >= 0.0)) throw std::invalid_argument("mean_photon_number: gain must be >= 0");
  if (gain == 0.0) return 0.0;
  const SchmidtSpectrum s = schmidt_spectrum(p);
  const double r0 = (1.0 - s.zeta_q * s.zeta_q) * std::sqrt(1.0 - s.zeta_t * s.zeta_t);
  double acc = 0.0;
  double zt = 1.0;  // zeta_t^{n_t}
  for (int nt = 0; nt <= kModeCap; ++nt) {
    double axis = 0.0;
    double zq = 1.0;  // zeta_q^s
    for (int sidx = 0; sidx <= kModeCap; ++sidx) {
      // s = n_x + n_y has multiplicity s + 1
      const double term = 2.0 * (sidx + 1) * sinh_sq(r0 * zt * zq * gain);
      axis += term;
      if (sidx == kModeCap && term > 1e-12 * axis)
        throw std::runtime_error("mean_photon_number: transverse sum hit mode cap");
      if (sidx >= 8 && term < kTermFloor * axis) break;
      zq *= s.zeta_q;
      if (zq == 0.0) break;
    }
    acc += axis;
    if (nt == kModeCap && axis > 1e-12 * acc)
      throw std::runtime_error("mean_photon_number: spectral sum hit mode cap");
    if (nt >= 8 && axis < kTermFloor * acc) break;
    zt *= s.zeta_t;
    if (zt == 0.0) break;
  }
  return acc;
}

double photon_flux_density(const PdcParams& p, double gain) {
  return mean_photon_number(p, gain) * p.f_rep / p.pump_area();
}

double gain_for_photon_number(const PdcParams& p, double n_target) {
  p.validate();
  if (!(n_target >= 0.0) || !std::isfinite(n_target))
    throw std::invalid_argument("gain_for_photon_number: target must be finite and >= 0");
  if (n_target == 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (mean_photon_number(p, hi) < n_target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e3)
      throw std::runtime_error("gain_for_photon_number: target out of reach");
  }
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (mean_photon_number(p, mid) < n_target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double entanglement_time(const PdcParams& p) {
  p.validate();
  return kTwoPi / p.Omega_m;
}

double entanglement_area(const PdcParams& p) {
  p.validate();
  const double w = kTwoPi / p.Q_m;
  return w * w;
}

double jsa_eval(const PdcParams& p, double omega_s, double omega_i,
                const std::array<double, 2>& q_s, const std::array<double, 2>& q_i) {
  p.validate();
  const double nu_s = omega_s - 0.5 * p.omega_p;
  const double nu_i = omega_i - 0.5 * p.omega_p;
  const double sum = nu_s + nu_i, dif = nu_s - nu_i;
  const double f_spec =
      std::pow(M_PI * p.Omega_m * p.Omega_p, -0.5) *
      std::exp(-0.25 * sum * sum / (p.Omega_p * p.Omega_p) -
               0.25 * dif * dif / (p.Omega_m * p.Omega_m));
  double qs2 = 0.0, qd2 = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double a = q_s[k] + q_i[k], b = q_s[k] - q_i[k];
    qs2 += a * a;
    qd2 += b * b;
  }
  const double f_mom = 1.0 / (M_PI * p.Q_p * p.Q_m) *
                       std::exp(-0.25 * qs2 / (p.Q_p * p.Q_p) -
                                0.25 * qd2 / (p.Q_m * p.Q_m));
  return f_spec * f_mom;
}

double mehler_partial_sum(double zeta, double x, double y, int n_max, bool alternating) {
  if (!(std::fabs(zeta) < 1.0))
    throw std::invalid_argument("mehler_partial_sum: |zeta| must be < 1");
  if (n_max < 0) throw std::invalid_argument("mehler_partial_sum: n_max must be >= 0");
  std::vector<double> hx(n_max + 1), hy(n_max + 1);
  specfun::hermite_fn_all(n_max, x, hx.data());
  specfun::hermite_fn_all(n_max, y, hy.data());
  const double base = alternating ? -zeta : zeta;
  double acc = 0.0, pw = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    acc += pw * hx[n] * hy[n];
    pw *= base;
  }
  return std::sqrt(1.0 - zeta * zeta) * acc;
}

}  // namespace etpa::pdc
