#pragma once
// Figure-reproduction sweeps and their CSV serialization. Each sweep walks an
// axis for every series overlay, evaluating the analytic expressions, the
// split optimizer, and (where requested) the Monte Carlo engine, and lays the
// results out as a rectangular table.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "swiptsic/analytic.hpp"
#include "swiptsic/errors.hpp"
#include "swiptsic/optimizer.hpp"
#include "swiptsic/params.hpp"
#include "swiptsic/simulator.hpp"

namespace swiptsic {

enum class FigureKind { Fig1, Fig2, Fig3, Custom };

struct SweepOutputs {
  bool analytic = true;
  bool simulated = false;
  bool optimized_v = true;
  bool energy = false;
  bool upper_bound = false;
};

struct SweepSpec {
  FigureKind figure = FigureKind::Custom;
  std::string axis;                  // "n", "pt_db", "lambda", ... (see apply_parameter)
  std::vector<double> axis_values;
  std::string series;                // one overlay per value
  std::vector<double> series_values;
  SweepOutputs outputs;

  // Coverage and optimal split against the cancellation budget, one curve per
  // threshold overlay.
  static SweepSpec fig1() {
    SweepSpec s;
    s.figure = FigureKind::Fig1;
    s.axis = "n";
    s.axis_values = {0, 1, 2, 3, 4};
    s.series = "theta_db";
    s.series_values = {-5.0, 0.0, 5.0};
    s.outputs = {.analytic = true, .simulated = true, .optimized_v = true};
    return s;
  }

  // Harvested energy against transmit power, one curve per baseline split.
  static SweepSpec fig2() {
    SweepSpec s;
    s.figure = FigureKind::Fig2;
    s.axis = "pt_db";
    for (int db = 10; db <= 80; db += 5) s.axis_values.push_back(db);
    s.series = "v";
    s.series_values = {0.5, 0.9};
    s.outputs = {.analytic = false, .simulated = false, .optimized_v = true, .energy = true,
                 .upper_bound = true};
    return s;
  }

  // Harvested energy against density, one curve per pair distance.
  static SweepSpec fig3() {
    SweepSpec s;
    s.figure = FigureKind::Fig3;
    s.axis = "lambda";
    for (int k = 0; k <= 12; ++k) s.axis_values.push_back(std::pow(10.0, -5.0 + k / 3.0));
    s.series = "d0";
    s.series_values = {1.0, 10.0};
    s.outputs = {.analytic = false, .simulated = false, .optimized_v = true, .energy = true,
                 .upper_bound = true};
    return s;
  }
};

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

namespace detail {

inline void apply_parameter(const std::string& name, double value, NetworkParams& p,
                            SicConfig& sic) {
  if (name == "lambda") p.lambda = value;
  else if (name == "p_t") p.p_t = value;
  else if (name == "pt_db") p.p_t = from_decibels(value);
  else if (name == "theta") p.theta = value;
  else if (name == "theta_db") p.theta = from_decibels(value);
  else if (name == "d0") p.d0 = value;
  else if (name == "alpha") p.alpha = value;
  else if (name == "v") p.v = value;
  else if (name == "sigma2") p.sigma2 = value;
  else if (name == "sigma2_c") p.sigma2_c = value;
  else if (name == "zeta") p.zeta = value;
  else if (name == "n") sic.n_max = static_cast<int>(value);
  else throw config_error("unknown sweep parameter '" + name + "'");
}

inline std::string format_cell(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

inline SweepTable run_sweep(const SweepSpec& spec, const NetworkParams& base, const SicConfig& sic,
                            const SimConfig& sim_cfg) {
  base.validate();
  sic.validate();
  sim_cfg.validate(base);
  if (spec.axis_values.empty() || spec.series_values.empty())
    throw config_error("sweep needs at least one axis value and one series value");

  SweepTable table;
  table.columns = {spec.series, spec.axis};
  const SweepOutputs& out = spec.outputs;
  if (out.analytic) {
    table.columns.push_back("pi_nc");
    table.columns.push_back("pi_sic");
  }
  if (out.simulated) {
    table.columns.push_back("pi_sic_sim");
    table.columns.push_back("pi_sic_sim_se");
    table.columns.push_back("pi_sic_sim_ci_low");
    table.columns.push_back("pi_sic_sim_ci_high");
  }
  if (out.optimized_v) table.columns.push_back("v_star");
  if (out.energy) {
    table.columns.push_back("energy_fixed_v");
    table.columns.push_back("energy_optimized");
  }
  if (out.upper_bound) {
    table.columns.push_back("energy_upper_bound");
    table.columns.push_back("energy_upper_bound_zero_d0");
  }

  for (double series_value : spec.series_values) {
    NetworkParams series_params = base;
    SicConfig series_sic = sic;
    detail::apply_parameter(spec.series, series_value, series_params, series_sic);

    // One simulated coverage profile per series covers every axis budget when
    // the axis is the cancellation depth; otherwise simulate per row.
    std::vector<SimEstimate> profile;
    if (out.simulated && spec.axis == "n") {
      int max_n = 0;
      for (double n : spec.axis_values) max_n = std::max(max_n, static_cast<int>(n));
      profile = estimate_coverage_profile(series_params, max_n, series_sic, sim_cfg);
    }

    for (double axis_value : spec.axis_values) {
      NetworkParams p = series_params;
      SicConfig row_sic = series_sic;
      detail::apply_parameter(spec.axis, axis_value, p, row_sic);
      try {
        std::vector<double> row{series_value, axis_value};
        if (out.analytic) {
          const CoverageBreakdown b = coverage_sic(p, row_sic);
          row.push_back(b.pi_nc);
          row.push_back(b.pi_sic);
        }
        if (out.simulated) {
          SimEstimate est;
          if (spec.axis == "n") {
            est = profile.at(static_cast<std::size_t>(axis_value));
          } else {
            est = estimate_coverage(p, row_sic, sim_cfg);
          }
          row.push_back(est.mean);
          row.push_back(est.std_error);
          row.push_back(est.ci95_low);
          row.push_back(est.ci95_high);
        }
        SplitSolution sol;
        if (out.optimized_v || out.energy) {
          // target: the no-cancellation coverage at the baseline split of this series
          sol = optimal_split_log(p, row_sic, log_coverage_no_sic(p));
        }
        if (out.optimized_v) row.push_back(sol.v_star);
        if (out.energy) {
          row.push_back(avg_harvested_energy(p));
          row.push_back(sol.energy);
        }
        if (out.upper_bound) {
          row.push_back(harvested_energy_upper_bound(p, false));
          row.push_back(harvested_energy_upper_bound(p, true));
        }
        table.rows.push_back(std::move(row));
      } catch (const std::exception& e) {
        throw numerical_error("sweep row " + spec.series + "=" + detail::format_cell(series_value) +
                              ", " + spec.axis + "=" + detail::format_cell(axis_value) +
                              " failed: " + e.what());
      }
    }
  }
  return table;
}

// CSV with one header row; cells carry 17 significant digits so every double
// round-trips exactly.
inline std::string to_csv(const SweepTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw numerical_error("sweep table is not rectangular");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << detail::format_cell(row[c]);
    }
    out << '\n';
  }
  return out.str();
}

inline void emit_csv(const SweepTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // fixed newlines on every platform
  if (!out) throw io_error("cannot open output file: " + path.string());
  out << to_csv(table);
  if (!out) throw io_error("write failed: " + path.string());
}

inline SweepTable parse_csv_text(const std::string& text) {
  SweepTable table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw config_error("CSV is empty");
  std::istringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) table.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      try {
        row.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw config_error("CSV cell is not a number: " + cell);
      }
      if (used != cell.size()) throw config_error("CSV cell is not a number: " + cell);
    }
    if (row.size() != table.columns.size()) throw config_error("CSV row width mismatch");
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline SweepTable load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open CSV file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv_text(buf.str());
}

}  // namespace swiptsic
