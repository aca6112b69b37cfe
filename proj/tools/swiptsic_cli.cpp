// Command-line driver: single-point evaluations, Monte Carlo validation runs,
// power-split optimization, and figure-reproduction sweeps with CSV output.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <swiptsic/swiptsic.hpp>

namespace {

constexpr int kExitInvalidConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string config;
  std::optional<double> lambda, pt_db, theta_db, d0, alpha, v, sigma2, sigma2_c, zeta;
  std::optional<int> n;
  std::optional<long long> trials, batch_size;
  std::optional<std::uint64_t> seed;
  std::optional<double> radius;
  std::optional<int> threads;
  std::optional<double> eta;
  std::string ordering = "distance";
  std::string out;
};

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON parameter file (keys match field names; *_db for decibels)");
  cmd->add_option("--lambda", o.lambda, "transmitter density [nodes per unit area]");
  cmd->add_option("--pt-db", o.pt_db, "transmit power [dB]");
  cmd->add_option("--theta-db", o.theta_db, "SINR threshold [dB]");
  cmd->add_option("--d0", o.d0, "pair distance [m]");
  cmd->add_option("--alpha", o.alpha, "path-loss exponent (> 2)");
  cmd->add_option("--v", o.v, "power-splitting fraction routed to the decoder, (0, 1]");
  cmd->add_option("--sigma2", o.sigma2, "antenna noise variance");
  cmd->add_option("--sigma2-c", o.sigma2_c, "conversion noise variance");
  cmd->add_option("--zeta", o.zeta, "RF-to-DC conversion efficiency, (0, 1]");
  cmd->add_option("--n", o.n, "cancellation budget n_max");
  cmd->add_option("--ordering", o.ordering, "interferer order: distance | power")
      ->check(CLI::IsMember({"distance", "power"}));
}

void add_sim_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--trials", o.trials, "Monte Carlo trials");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--batch-size", o.batch_size, "trials per scheduled batch");
  cmd->add_option("--radius", o.radius, "simulation disc radius (default: auto-sized)");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all)");
}

swiptsic::NetworkParams resolve_params(const Options& o) {
  swiptsic::NetworkParams p;
  if (!o.config.empty()) p = swiptsic::load_params(o.config);
  if (o.lambda) p.lambda = *o.lambda;
  if (o.pt_db) p.p_t = swiptsic::from_decibels(*o.pt_db);
  if (o.theta_db) p.theta = swiptsic::from_decibels(*o.theta_db);
  if (o.d0) p.d0 = *o.d0;
  if (o.alpha) p.alpha = *o.alpha;
  if (o.v) p.v = *o.v;
  if (o.sigma2) p.sigma2 = *o.sigma2;
  if (o.sigma2_c) p.sigma2_c = *o.sigma2_c;
  if (o.zeta) p.zeta = *o.zeta;
  p.validate();
  return p;
}

swiptsic::SicConfig resolve_sic(const Options& o) {
  swiptsic::SicConfig sic;
  if (o.n) sic.n_max = *o.n;
  sic.ordering = o.ordering == "power" ? swiptsic::InterfererOrdering::ByInstantaneousPower
                                       : swiptsic::InterfererOrdering::ByDistance;
  sic.validate();
  return sic;
}

swiptsic::SimConfig resolve_sim(const Options& o, const swiptsic::NetworkParams& p) {
  swiptsic::SimConfig cfg;
  if (o.trials) cfg.trials = *o.trials;
  if (o.seed) cfg.master_seed = *o.seed;
  if (o.batch_size) cfg.batch_size = *o.batch_size;
  if (o.radius) cfg.window_radius = *o.radius;
  if (o.threads) cfg.threads = *o.threads;
  cfg.validate(p);
  return cfg;
}

void print_value(const char* name, double value) { std::printf("%s = %.17g\n", name, value); }

int run_coverage(const Options& o) {
  const auto p = resolve_params(o);
  const auto sic = resolve_sic(o);
  const auto b = swiptsic::coverage_sic(p, sic);
  print_value("pi_nc", b.pi_nc);
  for (std::size_t j = 0; j < b.pi_d.size(); ++j) {
    std::printf("pi_d[%zu] = %.17g\n", j + 1, b.pi_d[j]);
  }
  for (std::size_t j = 0; j < b.pi_c.size(); ++j) {
    std::printf("pi_c[%zu] = %.17g\n", j, b.pi_c[j]);
  }
  print_value("pi_sic", b.pi_sic);
  return 0;
}

int run_energy(const Options& o) {
  const auto p = resolve_params(o);
  print_value("mean_interference", swiptsic::mean_interference(p));
  print_value("avg_harvested_energy", swiptsic::avg_harvested_energy(p));
  print_value("upper_bound_v0", swiptsic::harvested_energy_upper_bound(p, false));
  print_value("upper_bound_v0_d0", swiptsic::harvested_energy_upper_bound(p, true));
  return 0;
}

int run_optimize(const Options& o) {
  const auto p = resolve_params(o);
  const auto sic = resolve_sic(o);
  const double log_eta = o.eta ? std::log(*o.eta) : swiptsic::log_coverage_no_sic(p);
  const auto sol = swiptsic::optimal_split_log(p, sic, log_eta);
  print_value("eta", std::exp(log_eta));
  print_value("log_eta", log_eta);
  print_value("v_star", sol.v_star);
  print_value("energy", sol.energy);
  print_value("coverage_at_v_star", sol.coverage_at_v_star);
  std::printf("constraint_active = %s\n", sol.constraint_active ? "true" : "false");
  std::printf("monotone_bracket = %s\n", sol.monotone_bracket ? "true" : "false");
  print_value("energy_gain", swiptsic::energy_gain_log(p, sic, log_eta));
  return 0;
}

int run_simulate(const Options& o) {
  const auto p = resolve_params(o);
  const auto sic = resolve_sic(o);
  const auto cfg = resolve_sim(o, p);
  print_value("window_radius", swiptsic::resolve_window_radius(p, cfg));
  std::printf("trials = %lld\nseed = %llu\n", cfg.trials,
              static_cast<unsigned long long>(cfg.master_seed));

  const auto cov = swiptsic::estimate_coverage(p, sic, cfg);
  print_value("coverage_mean", cov.mean);
  print_value("coverage_se", cov.std_error);
  print_value("coverage_ci95_low", cov.ci95_low);
  print_value("coverage_ci95_high", cov.ci95_high);
  print_value("coverage_analytic", swiptsic::coverage_sic(p, sic).pi_sic);

  const auto en = swiptsic::estimate_energy(p, cfg);
  print_value("energy_mean", en.mean);
  print_value("energy_se", en.std_error);
  print_value("energy_ci95_low", en.ci95_low);
  print_value("energy_ci95_high", en.ci95_high);
  print_value("energy_analytic", swiptsic::avg_harvested_energy(p));
  return 0;
}

int run_figure(const Options& o, const std::string& which) {
  const auto p = resolve_params(o);
  auto sic = resolve_sic(o);
  swiptsic::SweepSpec spec;
  if (which == "fig1") {
    spec = swiptsic::SweepSpec::fig1();
  } else if (which == "fig2") {
    spec = swiptsic::SweepSpec::fig2();
    if (!o.n) sic.n_max = 1;
  } else {
    spec = swiptsic::SweepSpec::fig3();
    if (!o.n) sic.n_max = 1;
  }
  const auto cfg = resolve_sim(o, p);
  const auto table = swiptsic::run_sweep(spec, p, sic, cfg);
  const std::string out = o.out.empty() ? which + ".csv" : o.out;
  swiptsic::emit_csv(table, out);
  std::printf("wrote %zu rows to %s\n", table.rows.size(), out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SWIPT power-splitting receiver analysis with successive interference cancellation"};
  app.require_subcommand(1);
  Options o;

  auto* coverage = app.add_subcommand("coverage", "analytic coverage breakdown at one parameter point");
  add_common_options(coverage, o);

  auto* energy = app.add_subcommand("energy", "mean interference and harvested energy");
  add_common_options(energy, o);

  auto* optimize = app.add_subcommand("optimize", "smallest split meeting the coverage target");
  add_common_options(optimize, o);
  optimize->add_option("--eta", o.eta, "coverage target (default: no-cancellation coverage at --v)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo coverage and energy with CIs");
  add_common_options(simulate, o);
  add_sim_options(simulate, o);

  auto* figure = app.add_subcommand("figure", "figure-reproduction sweep, written as CSV");
  std::string which;
  figure->add_option("name", which, "fig1 | fig2 | fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  add_common_options(figure, o);
  add_sim_options(figure, o);
  figure->add_option("--out", o.out, "output CSV path (default: <name>.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (coverage->parsed()) return run_coverage(o);
    if (energy->parsed()) return run_energy(o);
    if (optimize->parsed()) return run_optimize(o);
    if (simulate->parsed()) return run_simulate(o);
    if (figure->parsed()) return run_figure(o, which);
  } catch (const swiptsic::io_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const swiptsic::config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const swiptsic::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
