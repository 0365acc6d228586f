#include "etpa/signal_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "etpa/kernels.hpp"
#include "etpa/quadrature.hpp"
#include "etpa/special.hpp"

namespace etpa::signal_spectral {

namespace {

constexpr double kTwoPi = 6.283185307179586;
// Mode cap for the exact tables: recurrence intermediates are bounded by
// exp(w^2/4), so nodes must stay below sqrt(4*709) ~ 53 and the retained
// mode support sqrt(4N+2) must fit under it.
constexpr int kExactModeCap = 700;
constexpr double kMaxNode = 52.0;
constexpr int kNarrowModeCap = 4096;
constexpr int kPanelOrder = 16;

int mode_count(double zeta, double eps) {
  if (zeta <= 0.0) return 0;
  const double n = std::log(eps) / std::log(zeta) - 1.0;
  return n <= 0.0 ? 0 : static_cast<int>(std::ceil(n));
}

std::size_t tri_index(int m, int n) {  // m >= n
  return static_cast<std::size_t>(m) * (m + 1) / 2 + n;
}

struct NodeGrid {
  std::vector<double> w;
  std::vector<double> lorw;  // quadrature weight times Lorentzian value
};

// Gauss-Legendre panels covering the retained mode support, uniformly fine
// enough for the fastest mode oscillation plus geometric refinement around
// the Lorentzian core.
NodeGrid build_grid(int n_modes, double shift, double w_fg) {
  const double support = std::sqrt(4.0 * n_modes + 2.0) + 6.0;
  const double w_max = std::min(support, kMaxNode);
  const double panel = std::min(1.0, 15.0 / std::sqrt(2.0 * n_modes + 1.0));
  const int n_panels = std::max(1, static_cast<int>(std::ceil(2.0 * w_max / panel)));

  std::vector<double> edges;
  for (int k = 0; k <= n_panels; ++k)
    edges.push_back(-w_max + 2.0 * w_max * k / n_panels);
  const double core = -shift;  // Lorentzian peak in the reduced variable
  for (double f : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
    for (double s : {-1.0, 1.0}) {
      const double e = core + s * f * w_fg;
      if (e > -w_max && e < w_max) edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end());
  std::vector<double> dedup;
  for (double e : edges)
    if (dedup.empty() || e - dedup.back() > 1e-12 * w_max) dedup.push_back(e);

  NodeGrid g;
  std::vector<double> gw;
  for (std::size_t i = 0; i + 1 < dedup.size(); ++i)
    specfun::gauss_legendre(dedup[i], dedup[i + 1], kPanelOrder, g.w, gw);
  g.lorw.resize(g.w.size());
  for (std::size_t k = 0; k < g.w.size(); ++k)
    g.lorw[k] = gw[k] * specfun::lorentzian(shift + g.w[k], w_fg);
  return g;
}

// Seed of the alpha-diagonal overlap recurrence, carrying only a quarter
// Gaussian so the working values stay inside double range.
void seed_diagonal(int alpha, const std::vector<double>& w, std::vector<double>& out) {
  out.resize(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double x = w[k];
    if (x == 0.0) {
      out[k] = alpha == 0 ? 1.0 : 0.0;
      continue;
    }
    const double mag = std::exp(alpha * std::log(std::fabs(x)) -
                                0.5 * specfun::log_factorial(alpha) - 0.25 * x * x);
    out[k] = (alpha % 2 == 1 && x < 0.0) ? -mag : mag;
  }
}

double hbar4(double q_p, double x, double y) {
  const double rho2 = x * x + y * y;
  const double q2 = q_p * q_p;
  return q2 * q2 / (M_PI * M_PI) * std::exp(-2.0 * q2 * rho2);
}

double require_resonant(const SpectralSignalConfig& cfg) {
  const double det = cfg.mol.omega_fg - cfg.pdc.omega_p;
  if (std::fabs(det) > 1e-9 * std::max(1.0, std::fabs(cfg.pdc.omega_p)))
    throw std::invalid_argument(
        "narrow-line formulas hold on resonance only; use a SpectralEvaluator");
  return det;
}

}  // namespace

void SpectralSignalConfig::validate() const {
  pdc.validate();
  mol.validate();
  if (std::fabs(pdc.Q_m - pdc.Q_p) > 1e-12 * (pdc.Q_m + pdc.Q_p))
    throw std::invalid_argument(
        "spectral signal requires Q_m == Q_p (single transverse Schmidt mode)");
  if (!(mode_tail_epsilon > 0.0) || mode_tail_epsilon >= 1.0)
    throw std::invalid_argument("mode_tail_epsilon must be in (0,1)");
  if (!(sum_epsilon > 0.0) || sum_epsilon >= 1.0)
    throw std::invalid_argument("sum_epsilon must be in (0,1)");
}

double overlap_hermite(int m, int n, double delta_w) {
  if (n < 0 || m < n) throw std::invalid_argument("overlap_hermite: need m >= n >= 0");
  const double x = delta_w * delta_w;
  const double lg = 0.5 * (specfun::log_factorial(n) - specfun::log_factorial(m));
  double pw = 1.0;
  if (m != n) {
    if (delta_w == 0.0) return 0.0;
    pw = (m - n) % 2 == 1 && delta_w < 0.0 ? -1.0 : 1.0;
    pw *= std::exp((m - n) * std::log(std::fabs(delta_w)) + lg - 0.5 * x);
  } else {
    pw = std::exp(lg - 0.5 * x);
  }
  return pw * specfun::laguerre_assoc(n, m - n, x);
}

SpectralEvaluator::SpectralEvaluator(const SpectralSignalConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const pdc::PdcParams& p = cfg_.pdc;
  zeta_ = std::fabs(p.Omega_m - p.Omega_p) / (p.Omega_m + p.Omega_p);
  r0_ = std::sqrt(1.0 - zeta_ * zeta_);
  scale_ = std::sqrt(2.0 * p.Omega_m * p.Omega_p);
  n_modes_ = mode_count(zeta_, cfg_.mode_tail_epsilon);
  if (n_modes_ > kExactModeCap)
    throw std::runtime_error(
        "spectral evaluator: " + std::to_string(n_modes_) +
        " modes exceed the exact-table cap " + std::to_string(kExactModeCap) +
        " (bandwidth ratio too large for double-precision overlap tables)");

  const double shift = (cfg_.mol.omega_fg - p.omega_p) / scale_;
  const double w_fg = cfg_.mol.gamma_fg / scale_;
  const NodeGrid grid = build_grid(n_modes_, shift, w_fg);
  const std::size_t nk = grid.w.size();
  const int nm = n_modes_;
  const kernels::Ops& ops = kernels::active();

  std::vector<double> xsq(nk), e4(nk);
  for (std::size_t k = 0; k < nk; ++k) {
    xsq[k] = grid.w[k] * grid.w[k];
    e4[k] = std::exp(-0.25 * xsq[k]);
  }

  icorr_.assign(tri_index(nm, nm) + 1, 0.0);
  junc_.assign(tri_index(nm, nm) + 1, 0.0);

  // Correlated table: plain Laguerre rows phi_n = L_n(w^2) e^{-w^2/2}, built
  // with a quarter of the Gaussian folded into the working values.
  {
    std::vector<double> phi(static_cast<std::size_t>(nm + 1) * nk);
    std::vector<double> cur = e4, prev(nk, 0.0), next(nk);
    ops.mul(&phi[0], cur.data(), e4.data(), nk);
    for (int n = 0; n < nm; ++n) {
      const double inv = 1.0 / (n + 1);
      ops.recurrence_step(next.data(), cur.data(), prev.data(), xsq.data(),
                          (2.0 * n + 1.0) * inv, -inv, -n * inv, nk);
      prev.swap(cur);
      cur.swap(next);
      ops.mul(&phi[static_cast<std::size_t>(n + 1) * nk], cur.data(), e4.data(), nk);
    }
    for (int m = 0; m <= nm; ++m)
      for (int n = 0; n <= m; ++n)
        icorr_[tri_index(m, n)] =
            ops.dot3(grid.lorw.data(), &phi[static_cast<std::size_t>(m) * nk],
                     &phi[static_cast<std::size_t>(n) * nk], nk);
  }

  // Uncorrelated table: one normalized associated-Laguerre recurrence per
  // diagonal m - n = alpha.
  {
    std::vector<double> cur, prev(nk, 0.0), next(nk), row(nk);
    for (int alpha = 0; alpha <= nm; ++alpha) {
      seed_diagonal(alpha, grid.w, cur);
      std::fill(prev.begin(), prev.end(), 0.0);
      ops.mul(row.data(), cur.data(), e4.data(), nk);
      junc_[tri_index(alpha, 0)] = ops.dot_sq(grid.lorw.data(), row.data(), nk);
      for (int n = 0; n + alpha < nm; ++n) {
        const double inv = 1.0 / std::sqrt((n + 1.0) * (n + 1.0 + alpha));
        ops.recurrence_step(next.data(), cur.data(), prev.data(), xsq.data(),
                            (2.0 * n + 1.0 + alpha) * inv, -inv,
                            -std::sqrt(n * (n + static_cast<double>(alpha))) * inv, nk);
        prev.swap(cur);
        cur.swap(next);
        ops.mul(row.data(), cur.data(), e4.data(), nk);
        junc_[tri_index(alpha + n + 1, n + 1)] = ops.dot_sq(grid.lorw.data(), row.data(), nk);
      }
    }
  }
}

double SpectralEvaluator::weighted_sum_corr(double gain) const {
  const int nm = n_modes_;
  std::vector<double> c(nm + 1);
  double rn = r0_;
  for (int n = 0; n <= nm; ++n) {
    c[n] = 0.5 * std::sinh(2.0 * rn * gain);
    rn *= zeta_;
  }
  double acc = 0.0, prev_d = 0.0;
  for (int d = 0; d <= 2 * nm; ++d) {
    double sd = 0.0;
    for (int n = std::max(0, d - nm); n <= d / 2; ++n) {
      const int m = d - n;
      sd += (m == n ? 1.0 : 2.0) * c[n] * c[m] * icorr_[tri_index(m, n)];
    }
    acc += sd;
    if (d >= 4 && std::fabs(sd) <= cfg_.sum_epsilon * std::fabs(acc) &&
        std::fabs(prev_d) <= cfg_.sum_epsilon * std::fabs(acc))
      break;
    if (acc == 0.0 && d >= 4) break;
    prev_d = sd;
  }
  return acc;
}

double SpectralEvaluator::weighted_sum_unc(double gain) const {
  const int nm = n_modes_;
  std::vector<double> u(nm + 1);
  double rn = r0_;
  for (int n = 0; n <= nm; ++n) {
    const double s = std::sinh(rn * gain);
    u[n] = s * s;
    rn *= zeta_;
  }
  double acc = 0.0, prev_d = 0.0;
  for (int d = 0; d <= 2 * nm; ++d) {
    double sd = 0.0;
    for (int n = std::max(0, d - nm); n <= d / 2; ++n) {
      const int m = d - n;
      sd += (m == n ? 1.0 : 2.0) * u[n] * u[m] * junc_[tri_index(m, n)];
    }
    acc += sd;
    if (d >= 4 && std::fabs(sd) <= cfg_.sum_epsilon * std::fabs(acc) &&
        std::fabs(prev_d) <= cfg_.sum_epsilon * std::fabs(acc))
      break;
    if (acc == 0.0 && d >= 4) break;
    prev_d = sd;
  }
  return 2.0 * acc;
}

double SpectralEvaluator::p_corr(double gain, double x, double y) const {
  if (!(gain >= 0.0)) throw std::invalid_argument("p_corr: gain must be >= 0");
  return cfg_.mol.coupling * hbar4(cfg_.pdc.Q_p, x, y) * weighted_sum_corr(gain);
}

double SpectralEvaluator::p_unc(double gain, double x, double y) const {
  if (!(gain >= 0.0)) throw std::invalid_argument("p_unc: gain must be >= 0");
  return cfg_.mol.coupling * hbar4(cfg_.pdc.Q_p, x, y) * weighted_sum_unc(gain);
}

SignalPoint SpectralEvaluator::point(double gain) const {
  SignalPoint out;
  out.p_corr = p_corr(gain);
  out.p_unc = p_unc(gain);
  out.total = out.p_corr + out.p_unc;
  out.r_rel = r_rel(out.p_corr, out.p_unc);
  out.mean_n = pdc::mean_photon_number(cfg_.pdc, gain);
  return out;
}

double SpectralEvaluator::rate(double gain, const molecule::SampleParams& s) const {
  s.validate();
  const double q2 = cfg_.pdc.Q_p * cfg_.pdc.Q_p;
  return s.m_0 * s.delta_z * cfg_.pdc.f_rep / (kTwoPi * kTwoPi) * (q2 / kTwoPi) *
         cfg_.mol.coupling * (weighted_sum_corr(gain) + weighted_sum_unc(gain));
}

double p_corr_narrow(const SpectralSignalConfig& cfg, double gain, double x, double y) {
  cfg.validate();
  require_resonant(cfg);
  if (!(gain >= 0.0)) throw std::invalid_argument("p_corr_narrow: gain must be >= 0");
  const double zeta =
      std::fabs(cfg.pdc.Omega_m - cfg.pdc.Omega_p) / (cfg.pdc.Omega_m + cfg.pdc.Omega_p);
  double rn = std::sqrt(1.0 - zeta * zeta);
  double s = 0.0;
  for (int n = 0; n <= kNarrowModeCap; ++n) {
    const double term = 0.5 * std::sinh(2.0 * rn * gain);
    s += term;
    if (n >= 4 && term <= 1e-16 * s) break;
    if (n == kNarrowModeCap && term > 1e-12 * s)
      throw std::runtime_error("p_corr_narrow: mode sum hit cap");
    rn *= zeta;
    if (rn == 0.0) break;
  }
  return cfg.mol.coupling * hbar4(cfg.pdc.Q_p, x, y) * s * s;
}

double p_unc_narrow(const SpectralSignalConfig& cfg, double gain, double x, double y) {
  cfg.validate();
  require_resonant(cfg);
  if (!(gain >= 0.0)) throw std::invalid_argument("p_unc_narrow: gain must be >= 0");
  const double zeta =
      std::fabs(cfg.pdc.Omega_m - cfg.pdc.Omega_p) / (cfg.pdc.Omega_m + cfg.pdc.Omega_p);
  double rn = std::sqrt(1.0 - zeta * zeta);
  double s = 0.0;
  for (int n = 0; n <= kNarrowModeCap; ++n) {
    const double sh = std::sinh(rn * gain);
    const double term = sh * sh * sh * sh;
    s += term;
    if (n >= 4 && term <= 1e-16 * s) break;
    if (n == kNarrowModeCap && term > 1e-12 * s)
      throw std::runtime_error("p_unc_narrow: mode sum hit cap");
    rn *= zeta;
    if (rn == 0.0) break;
  }
  return 2.0 * cfg.mol.coupling * hbar4(cfg.pdc.Q_p, x, y) * s;
}

double r_rel(double p_corr, double p_unc) {
  if (p_unc == 0.0) {
    if (p_corr == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::numeric_limits<double>::infinity();
  }
  return p_corr / p_unc;
}

double rate_tpa(const SpectralSignalConfig& cfg, const molecule::SampleParams& s,
                double gain) {
  return SpectralEvaluator(cfg).rate(gain, s);
}

namespace {

std::string prov(const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%.17g", key, v);
  return buf;
}

void common_provenance(const SpectralSignalConfig& cfg, scan::ScanResult& r) {
  r.provenance.push_back(prov("omega_p", cfg.pdc.omega_p));
  r.provenance.push_back(prov("Omega_p", cfg.pdc.Omega_p));
  r.provenance.push_back(prov("Omega_m", cfg.pdc.Omega_m));
  r.provenance.push_back(prov("Q_p", cfg.pdc.Q_p));
  r.provenance.push_back(prov("Q_m", cfg.pdc.Q_m));
  r.provenance.push_back(prov("f_rep", cfg.pdc.f_rep));
  r.provenance.push_back(prov("omega_fg", cfg.mol.omega_fg));
  r.provenance.push_back(prov("gamma_fg", cfg.mol.gamma_fg));
  r.provenance.push_back(prov("coupling", cfg.mol.coupling));
}

}  // namespace

scan::ScanResult resonance_scan(const SpectralSignalConfig& cfg, double gain,
                                const std::vector<double>& detunings, int jobs) {
  cfg.validate();
  if (!(gain >= 0.0)) throw std::invalid_argument("resonance_scan: gain must be >= 0");
  scan::Axis ax{"detuning", detunings, false};
  auto eval = [cfg, gain](const std::vector<double>& c) {
    SpectralSignalConfig local = cfg;
    local.mol.omega_fg = cfg.pdc.omega_p + c[0];
    SpectralEvaluator ev(local);
    const SignalPoint pt = ev.point(gain);
    return std::vector<double>{pt.p_corr, pt.p_unc, pt.total, pt.r_rel};
  };
  scan::ScanResult r =
      scan::run_scan({ax}, {"p_corr", "p_unc", "total", "r_rel"}, eval, jobs);
  r.provenance.push_back("scan=resonance");
  r.provenance.push_back(prov("gain", gain));
  common_provenance(cfg, r);
  return r;
}

scan::ScanResult intensity_scan(const SpectralSignalConfig& cfg,
                                const std::vector<double>& mean_ns, bool exact,
                                int jobs) {
  cfg.validate();
  scan::Axis ax{"mean_n", mean_ns, true};
  std::shared_ptr<const SpectralEvaluator> ev;
  if (exact) ev = std::make_shared<SpectralEvaluator>(cfg);
  auto eval = [cfg, ev](const std::vector<double>& c) {
    const double gain = pdc::gain_for_photon_number(cfg.pdc, c[0]);
    double pc, pu;
    if (ev) {
      pc = ev->p_corr(gain);
      pu = ev->p_unc(gain);
    } else {
      pc = p_corr_narrow(cfg, gain);
      pu = p_unc_narrow(cfg, gain);
    }
    return std::vector<double>{gain, pc, pu, pc + pu, r_rel(pc, pu)};
  };
  scan::ScanResult r = scan::run_scan(
      {ax}, {"gain", "p_corr", "p_unc", "total", "r_rel"}, eval, jobs);
  r.provenance.push_back(exact ? "scan=intensity_exact" : "scan=intensity_narrow");
  common_provenance(cfg, r);
  return r;
}

scan::ScanResult broadening_scan(const SpectralSignalConfig& cfg, double mean_n,
                                 const std::vector<double>& gammas, int jobs) {
  cfg.validate();
  const double gain = pdc::gain_for_photon_number(cfg.pdc, mean_n);
  scan::Axis ax{"gamma", gammas, true};
  auto eval = [cfg, gain](const std::vector<double>& c) {
    SpectralSignalConfig local = cfg;
    local.mol.gamma_fg = c[0];
    SpectralEvaluator ev(local);
    const SignalPoint pt = ev.point(gain);
    return std::vector<double>{pt.p_corr, pt.p_unc, pt.total, pt.r_rel};
  };
  scan::ScanResult r =
      scan::run_scan({ax}, {"p_corr", "p_unc", "total", "r_rel"}, eval, jobs);
  r.provenance.push_back("scan=broadening");
  r.provenance.push_back(prov("mean_n", mean_n));
  r.provenance.push_back(prov("gain", gain));
  common_provenance(cfg, r);
  return r;
}

}  // namespace etpa::signal_spectral
