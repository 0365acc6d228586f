// Batch-scan CLI for entangled two-photon absorption signals.
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "etpa/kernels.hpp"
#include "etpa/molecule.hpp"
#include "etpa/pairlimit.hpp"
#include "etpa/pdc.hpp"
#include "etpa/scan.hpp"
#include "etpa/signal_spatial.hpp"
#include "etpa/signal_spectral.hpp"
#include "etpa/special.hpp"
#include "etpa/version.hpp"

namespace {

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo < hi)) throw CLI::ValidationError("grid needs min < max and points >= 2");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2 || !(0.0 < lo) || !(lo < hi))
    throw CLI::ValidationError("log grid needs 0 < min < max and points >= 2");
  std::vector<double> v(n);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < n; ++i) v[i] = lo * std::exp(ratio * i / (n - 1));
  return v;
}

// Preset values only fill options the user left untouched.
void maybe_set(const CLI::App* sub, const std::string& flag, double& slot, double v) {
  if (sub->get_option(flag)->count() == 0) slot = v;
}
void maybe_set(const CLI::App* sub, const std::string& flag, int& slot, int v) {
  if (sub->get_option(flag)->count() == 0) slot = v;
}
void maybe_set(const CLI::App* sub, const std::string& flag, std::string& slot,
               const std::string& v) {
  if (sub->get_option(flag)->count() == 0) slot = v;
}

void emit(etpa::scan::ScanResult& r, const std::string& command,
          const std::string& preset, const std::string& output) {
  std::vector<std::string> head;
  head.push_back(etpa::version_string);
  head.push_back("command=" + command);
  if (!preset.empty()) head.push_back("preset=" + preset);
  r.provenance.insert(r.provenance.begin(), head.begin(), head.end());
  if (output.empty())
    etpa::scan::write_csv(r, std::cout);
  else
    etpa::scan::write_csv_file(r, output);
}

struct PairLimitArgs {
  double omega_m = 10.0, q_m = 10.0, coupling = 1.0;
  double gamma_min = 1e-2, gamma_max = 1e2;
  int points = 61, jobs = 1;
  std::string preset, output;
};

struct ResonanceArgs {
  double omega_m = 10.0, gamma = 0.1, coupling = 1.0;
  double gain = 0.0, mean_n = 0.1;
  double det_min = -6.0, det_max = 6.0;
  int points = 41, jobs = 1;
  std::string preset, output;
};

struct CrossoverArgs {
  double omega_m = 10.0, gamma = 0.1, coupling = 1.0;
  double n_min = 1e-3, n_max = 25.0;
  int points = 41, jobs = 1;
  bool exact = false;
  std::string preset, output;
};

struct BroadeningArgs {
  double omega_m = 10.0, mean_n = 0.1, coupling = 1.0;
  double gamma_min = 1e-2, gamma_max = 1e2;
  int points = 17, jobs = 1;
  std::string preset, output;
};

struct SpatialArgs {
  double q_m = 5.0, gamma = 0.1, coupling = 1.0;
  double gain = 0.0, mean_n = 0.1;
  double x_max = 5.0, n_min = 1e-3, n_max = 25.0;
  double m_0 = 1.0, delta_z = 1.0;
  int points = 51, jobs = 1;
  std::string mode = "profile";
  std::string preset, output;
};

int run_pair_limit(const CLI::App* sub, PairLimitArgs a) {
  const std::map<std::string, std::function<void()>> presets{
      {"fig2", [&] {
         maybe_set(sub, "--omega-m", a.omega_m, 10.0);
         maybe_set(sub, "--q-m", a.q_m, 10.0);
         maybe_set(sub, "--gamma-min", a.gamma_min, 1e-2);
         maybe_set(sub, "--gamma-max", a.gamma_max, 1e2);
         maybe_set(sub, "--points", a.points, 61);
       }}};
  if (!a.preset.empty()) presets.at(a.preset)();

  etpa::pdc::PdcParams p;
  p.Omega_m = a.omega_m;
  p.Q_m = a.q_m;
  etpa::molecule::MoleculeParams mol;
  mol.coupling = a.coupling;
  mol.omega_fg = p.omega_p;

  etpa::scan::Axis ax{"gamma", log_grid(a.gamma_min, a.gamma_max, a.points), true};
  auto eval = [p, mol](const std::vector<double>& c) {
    etpa::molecule::MoleculeParams m = mol;
    m.gamma_fg = c[0];
    return std::vector<double>{etpa::pairlimit::sigma_e(p, m),
                               etpa::pairlimit::efficiency(m.gamma_fg / p.Omega_p),
                               etpa::pairlimit::p_freq_closed(p, m)};
  };
  etpa::scan::ScanResult r = etpa::scan::run_scan(
      {ax}, {"sigma_e", "efficiency", "p_freq"}, eval, a.jobs);
  char buf[64];
  std::snprintf(buf, sizeof buf, "sigma_e_gamma_zero=%.17g",
                etpa::pairlimit::sigma_e_gamma_zero(p, mol));
  r.provenance.push_back("scan=pair_limit");
  r.provenance.push_back(buf);
  std::snprintf(buf, sizeof buf, "Omega_m=%.17g", p.Omega_m);
  r.provenance.push_back(buf);
  std::snprintf(buf, sizeof buf, "Q_m=%.17g", p.Q_m);
  r.provenance.push_back(buf);
  emit(r, "pair-limit", a.preset, a.output);
  return 0;
}

int run_resonance(const CLI::App* sub, ResonanceArgs a) {
  const std::map<std::string, std::function<void()>> presets{
      {"fig3a", [&] { maybe_set(sub, "--omega-m", a.omega_m, 1.0); }},
      {"fig3b", [&] { maybe_set(sub, "--omega-m", a.omega_m, 2.0); }},
      {"fig3c", [&] { maybe_set(sub, "--omega-m", a.omega_m, 5.0); }},
      {"fig3d", [&] { maybe_set(sub, "--omega-m", a.omega_m, 10.0); }},
      {"fig3e", [&] {
         maybe_set(sub, "--omega-m", a.omega_m, 20.0);
         maybe_set(sub, "--points", a.points, 21);
       }},
      {"fig3f", [&] {
         maybe_set(sub, "--omega-m", a.omega_m, 50.0);
         maybe_set(sub, "--points", a.points, 11);
       }}};
  if (!a.preset.empty()) presets.at(a.preset)();

  etpa::signal_spectral::SpectralSignalConfig cfg;
  cfg.pdc.Omega_m = a.omega_m;
  cfg.mol.gamma_fg = a.gamma;
  cfg.mol.coupling = a.coupling;
  cfg.mol.omega_fg = cfg.pdc.omega_p;
  const double gain = sub->get_option("--gain")->count() > 0
                          ? a.gain
                          : etpa::pdc::gain_for_photon_number(cfg.pdc, a.mean_n);
  etpa::scan::ScanResult r = etpa::signal_spectral::resonance_scan(
      cfg, gain, linear_grid(a.det_min, a.det_max, a.points), a.jobs);
  emit(r, "resonance", a.preset, a.output);
  return 0;
}

int run_crossover(const CLI::App* sub, CrossoverArgs a) {
  const std::map<std::string, std::function<void()>> presets{
      {"fig4", [&] {
         maybe_set(sub, "--omega-m", a.omega_m, 10.0);
         maybe_set(sub, "--n-min", a.n_min, 1e-3);
         maybe_set(sub, "--n-max", a.n_max, 25.0);
         maybe_set(sub, "--points", a.points, 41);
       }}};
  if (!a.preset.empty()) presets.at(a.preset)();

  etpa::signal_spectral::SpectralSignalConfig cfg;
  cfg.pdc.Omega_m = a.omega_m;
  cfg.mol.gamma_fg = a.gamma;
  cfg.mol.coupling = a.coupling;
  cfg.mol.omega_fg = cfg.pdc.omega_p;
  etpa::scan::ScanResult r = etpa::signal_spectral::intensity_scan(
      cfg, log_grid(a.n_min, a.n_max, a.points), a.exact, a.jobs);
  emit(r, "crossover", a.preset, a.output);
  return 0;
}

int run_broadening(const CLI::App* sub, BroadeningArgs a) {
  const std::map<std::string, std::function<void()>> presets{
      {"fig5a", [&] {
         maybe_set(sub, "--omega-m", a.omega_m, 10.0);
         maybe_set(sub, "--mean-n", a.mean_n, 0.1);
       }},
      {"fig5b", [&] {
         maybe_set(sub, "--omega-m", a.omega_m, 10.0);
         maybe_set(sub, "--mean-n", a.mean_n, 1.0);
       }},
      {"fig5c", [&] {
         maybe_set(sub, "--omega-m", a.omega_m, 10.0);
         maybe_set(sub, "--mean-n", a.mean_n, 10.0);
       }},
      {"fig5d", [&] {
         maybe_set(sub, "--omega-m", a.omega_m, 50.0);
         maybe_set(sub, "--mean-n", a.mean_n, 0.1);
         maybe_set(sub, "--points", a.points, 9);
       }}};
  if (!a.preset.empty()) presets.at(a.preset)();

  etpa::signal_spectral::SpectralSignalConfig cfg;
  cfg.pdc.Omega_m = a.omega_m;
  cfg.mol.coupling = a.coupling;
  cfg.mol.omega_fg = cfg.pdc.omega_p;
  cfg.mol.gamma_fg = a.gamma_min;  // placeholder; the scan sets it per point
  etpa::scan::ScanResult r = etpa::signal_spectral::broadening_scan(
      cfg, a.mean_n, log_grid(a.gamma_min, a.gamma_max, a.points), a.jobs);

  // Normalise against the sharp-line values at the same gain.
  const double gain = etpa::pdc::gain_for_photon_number(cfg.pdc, a.mean_n);
  const double pc0 = etpa::signal_spectral::p_corr_narrow(cfg, gain);
  const double pt0 = pc0 + etpa::signal_spectral::p_unc_narrow(cfg, gain);
  r.columns.insert(r.columns.end() - 1, {"p_corr_norm", "total_norm"});
  for (std::vector<double>& row : r.data) {
    const double pc = row[1], tot = row[3];
    row.insert(row.end() - 1, {pc / pc0, tot / pt0});
  }
  emit(r, "broadening", a.preset, a.output);
  return 0;
}

int run_spatial(const CLI::App* sub, SpatialArgs a) {
  const std::map<std::string, std::function<void()>> presets{
      {"fig6a", [&] {
         maybe_set(sub, "--mode", a.mode, "profile");
         maybe_set(sub, "--q-m", a.q_m, 5.0);
         maybe_set(sub, "--mean-n", a.mean_n, 0.1);
       }},
      {"fig6b", [&] {
         maybe_set(sub, "--mode", a.mode, "profile");
         maybe_set(sub, "--q-m", a.q_m, 5.0);
         maybe_set(sub, "--mean-n", a.mean_n, 10.0);
       }},
      {"fig7", [&] {
         maybe_set(sub, "--mode", a.mode, std::string("integrated"));
         maybe_set(sub, "--q-m", a.q_m, 10.0);
         maybe_set(sub, "--points", a.points, 31);
       }}};
  if (!a.preset.empty()) presets.at(a.preset)();

  etpa::signal_spatial::SpatialSignalConfig cfg;
  cfg.pdc.Q_m = a.q_m;
  cfg.mol.gamma_fg = a.gamma;
  cfg.mol.coupling = a.coupling;
  cfg.mol.omega_fg = cfg.pdc.omega_p;
  if (a.mode == "profile") {
    const double gain = sub->get_option("--gain")->count() > 0
                            ? a.gain
                            : etpa::pdc::gain_for_photon_number(cfg.pdc, a.mean_n);
    etpa::scan::ScanResult r = etpa::signal_spatial::profile_scan(
        cfg, gain, linear_grid(0.0, a.x_max, a.points), a.jobs);
    emit(r, "spatial", a.preset, a.output);
    return 0;
  }
  etpa::molecule::SampleParams sample;
  sample.m_0 = a.m_0;
  sample.delta_z = a.delta_z;
  etpa::scan::ScanResult r = etpa::signal_spatial::integrated_scan(
      cfg, sample, log_grid(a.n_min, a.n_max, a.points), a.jobs);
  emit(r, "spatial", a.preset, a.output);
  return 0;
}

void add_common(CLI::App* sub, int& jobs, std::string& preset, std::string& output,
                const std::vector<std::string>& preset_names) {
  sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--preset", preset, "named parameter set")
      ->check(CLI::IsMember(preset_names));
  sub->add_option("-o,--output", output, "write CSV here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entangled two-photon absorption scans over the gain crossover"};
  app.set_version_flag("--version", etpa::version_string);
  app.set_config("--config", "", "read options from an ini file");
  app.require_subcommand(1);
  std::string simd = "auto";
  app.add_option("--simd", simd, "kernel backend: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  PairLimitArgs pa;
  CLI::App* pair = app.add_subcommand("pair-limit", "cross section versus linewidth");
  pair->add_option("--omega-m", pa.omega_m, "difference bandwidth / pump bandwidth")
      ->check(CLI::PositiveNumber);
  pair->add_option("--q-m", pa.q_m, "difference width / pump width")
      ->check(CLI::PositiveNumber);
  pair->add_option("--coupling", pa.coupling, "squared transition moment")
      ->check(CLI::PositiveNumber);
  pair->add_option("--gamma-min", pa.gamma_min)->check(CLI::PositiveNumber);
  pair->add_option("--gamma-max", pa.gamma_max)->check(CLI::PositiveNumber);
  pair->add_option("--points", pa.points)->check(CLI::Range(2, 100000));
  add_common(pair, pa.jobs, pa.preset, pa.output, {"fig2"});

  ResonanceArgs ra;
  CLI::App* res = app.add_subcommand("resonance", "signal versus two-photon detuning");
  res->add_option("--omega-m", ra.omega_m)->check(CLI::PositiveNumber);
  res->add_option("--gamma", ra.gamma, "molecular linewidth")->check(CLI::PositiveNumber);
  res->add_option("--coupling", ra.coupling)->check(CLI::PositiveNumber);
  CLI::Option* rg = res->add_option("--gain", ra.gain)->check(CLI::NonNegativeNumber);
  CLI::Option* rn = res->add_option("--mean-n", ra.mean_n)->check(CLI::PositiveNumber);
  rg->excludes(rn);
  rn->excludes(rg);
  res->add_option("--det-min", ra.det_min);
  res->add_option("--det-max", ra.det_max);
  res->add_option("--points", ra.points)->check(CLI::Range(2, 100000));
  add_common(res, ra.jobs, ra.preset, ra.output,
             {"fig3a", "fig3b", "fig3c", "fig3d", "fig3e", "fig3f"});

  CrossoverArgs ca;
  CLI::App* cro = app.add_subcommand("crossover", "signal versus mean photon number");
  cro->add_option("--omega-m", ca.omega_m)->check(CLI::PositiveNumber);
  cro->add_option("--gamma", ca.gamma, "linewidth for --exact")->check(CLI::PositiveNumber);
  cro->add_option("--coupling", ca.coupling)->check(CLI::PositiveNumber);
  cro->add_option("--n-min", ca.n_min)->check(CLI::PositiveNumber);
  cro->add_option("--n-max", ca.n_max)->check(CLI::PositiveNumber);
  cro->add_option("--points", ca.points)->check(CLI::Range(2, 100000));
  cro->add_flag("--exact", ca.exact, "finite-linewidth tables instead of sharp-line sums");
  add_common(cro, ca.jobs, ca.preset, ca.output, {"fig4"});

  BroadeningArgs ba;
  CLI::App* bro = app.add_subcommand("broadening", "signal versus molecular linewidth");
  bro->add_option("--omega-m", ba.omega_m)->check(CLI::PositiveNumber);
  bro->add_option("--mean-n", ba.mean_n)->check(CLI::PositiveNumber);
  bro->add_option("--coupling", ba.coupling)->check(CLI::PositiveNumber);
  bro->add_option("--gamma-min", ba.gamma_min)->check(CLI::PositiveNumber);
  bro->add_option("--gamma-max", ba.gamma_max)->check(CLI::PositiveNumber);
  bro->add_option("--points", ba.points)->check(CLI::Range(2, 100000));
  add_common(bro, ba.jobs, ba.preset, ba.output, {"fig5a", "fig5b", "fig5c", "fig5d"});

  SpatialArgs sa;
  CLI::App* spa = app.add_subcommand("spatial", "transverse profile or integrated rate");
  spa->add_option("--mode", sa.mode, "profile or integrated")
      ->check(CLI::IsMember({"profile", "integrated"}));
  spa->add_option("--q-m", sa.q_m)->check(CLI::PositiveNumber);
  spa->add_option("--gamma", sa.gamma)->check(CLI::PositiveNumber);
  spa->add_option("--coupling", sa.coupling)->check(CLI::PositiveNumber);
  CLI::Option* sg = spa->add_option("--gain", sa.gain)->check(CLI::NonNegativeNumber);
  CLI::Option* sn = spa->add_option("--mean-n", sa.mean_n)->check(CLI::PositiveNumber);
  sg->excludes(sn);
  sn->excludes(sg);
  spa->add_option("--x-max", sa.x_max, "profile extent in pump-width units")
      ->check(CLI::PositiveNumber);
  spa->add_option("--n-min", sa.n_min)->check(CLI::PositiveNumber);
  spa->add_option("--n-max", sa.n_max)->check(CLI::PositiveNumber);
  spa->add_option("--m0", sa.m_0, "absorber density")->check(CLI::PositiveNumber);
  spa->add_option("--dz", sa.delta_z, "sample thickness")->check(CLI::PositiveNumber);
  spa->add_option("--points", sa.points)->check(CLI::Range(2, 100000));
  add_common(spa, sa.jobs, sa.preset, sa.output, {"fig6a", "fig6b", "fig7"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    etpa::kernels::set_backend(simd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (pair->parsed()) return run_pair_limit(pair, pa);
    if (res->parsed()) return run_resonance(res, ra);
    if (cro->parsed()) return run_crossover(cro, ca);
    if (bro->parsed()) return run_broadening(bro, ba);
    if (spa->parsed()) return run_spatial(spa, sa);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
