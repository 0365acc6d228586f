#include "etpa/signal_spatial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "etpa/kernels.hpp"
#include "etpa/quadrature.hpp"
#include "etpa/special.hpp"

namespace etpa::signal_spatial {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kInvPi4 = 0.7511255444649425;  // pi^(-1/4)
constexpr int kModeCap = 700;    // double-range limit of the mode recurrence
constexpr double kMaxNode = 52.0;
constexpr int kPanelOrder = 16;

int mode_count(double zeta, double eps) {
  if (zeta <= 0.0) return 0;
  const double n = std::log(eps) / std::log(zeta) - 1.0;
  return n <= 0.0 ? 0 : static_cast<int>(std::ceil(n));
}

std::string prov(const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%.17g", key, v);
  return buf;
}

void common_provenance(const SpatialSignalConfig& cfg, scan::ScanResult& r) {
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

void SpatialSignalConfig::validate() const {
  pdc.validate();
  mol.validate();
  if (std::fabs(pdc.Omega_m - pdc.Omega_p) > 1e-12 * (pdc.Omega_m + pdc.Omega_p))
    throw std::invalid_argument(
        "spatial signal requires Omega_m == Omega_p (single spectral Schmidt mode)");
  if (!(mode_tail_epsilon > 0.0) || mode_tail_epsilon >= 1.0)
    throw std::invalid_argument("mode_tail_epsilon must be in (0,1)");
}

double spec_overlap(const SpatialSignalConfig& cfg) {
  cfg.validate();
  const double u = std::sqrt(2.0) * cfg.pdc.Omega_p;
  return specfun::faddeeva_re((cfg.mol.omega_fg - cfg.pdc.omega_p) / u,
                              cfg.mol.gamma_fg / u);
}

SpatialEvaluator::SpatialEvaluator(const SpatialSignalConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const pdc::PdcParams& p = cfg_.pdc;
  zeta_ = std::fabs(p.Q_m - p.Q_p) / (p.Q_m + p.Q_p);
  spec_ = spec_overlap(cfg_);
  n_modes_ = mode_count(zeta_, cfg_.mode_tail_epsilon);
  if (n_modes_ > kModeCap)
    throw std::runtime_error(
        "spatial evaluator: " + std::to_string(n_modes_) +
        " modes exceed the table cap " + std::to_string(kModeCap) +
        " (width ratio too large for double-precision mode tables)");

  // Gauss-Legendre grid over the retained mode support, fine enough for the
  // squared-mode oscillation.
  const int nm = n_modes_;
  const double support = std::sqrt(2.0 * nm + 1.0) + 6.0;
  const double x_max = std::min(support, kMaxNode);
  const double panel = std::min(1.0, 8.0 / std::sqrt(2.0 * nm + 1.0));
  const int n_panels = std::max(1, static_cast<int>(std::ceil(2.0 * x_max / panel)));
  std::vector<double> nodes, glw;
  for (int k = 0; k < n_panels; ++k)
    specfun::gauss_legendre(-x_max + 2.0 * x_max * k / n_panels,
                            -x_max + 2.0 * x_max * (k + 1) / n_panels, kPanelOrder,
                            nodes, glw);
  const std::size_t nk = nodes.size();
  const kernels::Ops& ops = kernels::active();

  // Mode rows carry a quarter of the Gaussian twice: values stay in range
  // and the stored rows are the squared mode functions.
  std::vector<double> e4(nk), seed(nk);
  for (std::size_t k = 0; k < nk; ++k) {
    e4[k] = std::exp(-0.25 * nodes[k] * nodes[k]);
    seed[k] = kInvPi4 * e4[k];
  }
  std::vector<double> hsq(static_cast<std::size_t>(nm + 1) * nk);
  std::vector<double> cur = seed, prev(nk, 0.0), next(nk), row(nk);
  ops.mul(row.data(), cur.data(), e4.data(), nk);
  ops.mul(&hsq[0], row.data(), row.data(), nk);
  for (int n = 0; n < nm; ++n) {
    ops.recurrence_step(next.data(), cur.data(), prev.data(), nodes.data(), 0.0,
                        std::sqrt(2.0 / (n + 1.0)), -std::sqrt(n / (n + 1.0)), nk);
    prev.swap(cur);
    cur.swap(next);
    ops.mul(row.data(), cur.data(), e4.data(), nk);
    ops.mul(&hsq[static_cast<std::size_t>(n + 1) * nk], row.data(), row.data(), nk);
  }
  vtab_.assign(static_cast<std::size_t>(nm + 1) * (nm + 1), 0.0);
  for (int a = 0; a <= nm; ++a)
    for (int b = 0; b <= a; ++b) {
      const double v = ops.dot3(glw.data(), &hsq[static_cast<std::size_t>(a) * nk],
                                &hsq[static_cast<std::size_t>(b) * nk], nk);
      vtab_[static_cast<std::size_t>(a) * (nm + 1) + b] = v;
      vtab_[static_cast<std::size_t>(b) * (nm + 1) + a] = v;
    }
}

// Full transverse mode sum S(x, y) including the Q_m Q_p prefactor;
// correlated pairing uses sinh cosh weights, the uncorrelated one
// sign-alternating sinh^2 weights.
double SpatialEvaluator::mode_sum(double gain, double x, double y,
                                  bool alternating) const {
  const int nm = n_modes_;
  const double qq = cfg_.pdc.Q_m * cfg_.pdc.Q_p;
  const double sx = std::sqrt(qq);
  std::vector<double> w(2 * nm + 1);
  double rs = 1.0 - zeta_ * zeta_;
  for (int s = 0; s <= 2 * nm; ++s) {
    if (alternating) {
      const double sh = std::sinh(rs * gain);
      w[s] = sh * sh;
    } else {
      w[s] = 0.5 * std::sinh(2.0 * rs * gain);
    }
    rs *= zeta_;
  }
  std::vector<double> hx(nm + 1), hy(nm + 1);
  specfun::hermite_fn_all(nm, sx * x, hx.data());
  specfun::hermite_fn_all(nm, sx * y, hy.data());
  for (int n = 0; n <= nm; ++n) {
    hx[n] *= hx[n];
    hy[n] *= hy[n];
    if (alternating && n % 2 == 1) {
      hx[n] = -hx[n];
      hy[n] = -hy[n];
    }
  }
  const kernels::Ops& ops = kernels::active();
  double s = 0.0;
  for (int nx = 0; nx <= nm; ++nx)
    s += hx[nx] * ops.dot(&w[nx], hy.data(), nm + 1);
  return qq * s;
}

double SpatialEvaluator::p_corr(double gain, double x, double y) const {
  if (!(gain >= 0.0)) throw std::invalid_argument("p_corr: gain must be >= 0");
  const double s = mode_sum(gain, x, y, false);
  return cfg_.mol.coupling * spec_ * s * s;
}

double SpatialEvaluator::p_unc(double gain, double x, double y) const {
  if (!(gain >= 0.0)) throw std::invalid_argument("p_unc: gain must be >= 0");
  const double s = mode_sum(gain, x, y, true);
  return 2.0 * cfg_.mol.coupling * spec_ * s * s;
}

// sum_{j,l,j',l'} w_{j+l} w_{j'+l'} V_{jj'} V_{ll'} = tr((WV)(WV)) for the
// Hankel matrix W built from w.
double SpatialEvaluator::quartic_trace(const std::vector<double>& w) const {
  const int n = n_modes_ + 1;
  const kernels::Ops& ops = kernels::active();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] =
          ops.dot(&w[i], &vtab_[static_cast<std::size_t>(j) * n], n);
  double t = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t += a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(j) * n + i];
  return t;
}

IntegratedSignal SpatialEvaluator::integrated(double gain,
                                              const molecule::SampleParams& s) const {
  if (!(gain >= 0.0)) throw std::invalid_argument("integrated: gain must be >= 0");
  s.validate();
  const int nm = n_modes_;
  std::vector<double> wc(2 * nm + 1), wu(2 * nm + 1);
  double rs = 1.0 - zeta_ * zeta_;
  for (int k = 0; k <= 2 * nm; ++k) {
    wc[k] = 0.5 * std::sinh(2.0 * rs * gain);
    const double sh = std::sinh(rs * gain);
    wu[k] = (k % 2 == 1 ? -1.0 : 1.0) * sh * sh;
    rs *= zeta_;
  }
  const double qq = cfg_.pdc.Q_m * cfg_.pdc.Q_p;
  const double pref = s.m_0 * s.delta_z * cfg_.pdc.f_rep / (kTwoPi * kTwoPi) *
                      cfg_.mol.coupling * spec_ * qq;
  IntegratedSignal out;
  out.rate_corr = pref * quartic_trace(wc);
  out.rate_unc = 2.0 * pref * quartic_trace(wu);
  out.rate_total = out.rate_corr + out.rate_unc;
  return out;
}

scan::ScanResult profile_scan(const SpatialSignalConfig& cfg, double gain,
                              const std::vector<double>& xs, int jobs) {
  cfg.validate();
  if (!(gain >= 0.0)) throw std::invalid_argument("profile_scan: gain must be >= 0");
  auto ev = std::make_shared<const SpatialEvaluator>(cfg);
  scan::Axis ax{"x", xs, false};
  auto eval = [ev, gain](const std::vector<double>& c) {
    const double pc = ev->p_corr(gain, c[0], 0.0);
    const double pu = ev->p_unc(gain, c[0], 0.0);
    return std::vector<double>{pc, pu, pc + pu};
  };
  scan::ScanResult r = scan::run_scan({ax}, {"p_corr", "p_unc", "total"}, eval, jobs);
  r.provenance.push_back("scan=spatial_profile");
  r.provenance.push_back(prov("gain", gain));
  common_provenance(cfg, r);
  return r;
}

scan::ScanResult integrated_scan(const SpatialSignalConfig& cfg,
                                 const molecule::SampleParams& s,
                                 const std::vector<double>& mean_ns, int jobs) {
  cfg.validate();
  s.validate();
  auto ev = std::make_shared<const SpatialEvaluator>(cfg);
  scan::Axis ax{"mean_n", mean_ns, true};
  auto eval = [ev, s, cfg](const std::vector<double>& c) {
    const double gain = pdc::gain_for_photon_number(cfg.pdc, c[0]);
    const IntegratedSignal sig = ev->integrated(gain, s);
    return std::vector<double>{gain, sig.rate_corr, sig.rate_unc, sig.rate_total};
  };
  scan::ScanResult r = scan::run_scan(
      {ax}, {"gain", "rate_corr", "rate_unc", "rate_total"}, eval, jobs);
  r.provenance.push_back("scan=spatial_integrated");
  r.provenance.push_back(prov("m_0", s.m_0));
  r.provenance.push_back(prov("delta_z", s.delta_z));
  common_provenance(cfg, r);
  return r;
}

}  // namespace etpa::signal_spatial
