#pragma once
// Smallest power split that still meets a coverage target, and the harvested
// energy it unlocks. Harvested energy decreases in v, so maximizing it under
// a coverage floor reduces to finding the leftmost admissible split.

#include <cmath>
#include <vector>

#include "swiptsic/analytic.hpp"
#include "swiptsic/errors.hpp"
#include "swiptsic/params.hpp"

namespace swiptsic {

// Open-interval guard for v > 0: sigma_c^2 / v diverges at zero, and below
// this floor coverage is numerically nil anyway.
inline constexpr double kSplitFloor = 1e-6;

struct SplitSolution {
  double v_star = 1.0;
  double energy = 0.0;              // harvested energy at v_star
  double coverage_at_v_star = 0.0;  // re-evaluated feasibility certificate
  bool constraint_active = true;    // false when the target was already met at the floor
  bool monotone_bracket = true;     // false when the v-grid guard saw non-monotone coverage
};

namespace detail {

struct SplitSearch {
  double v_star = kSplitFloor;
  bool monotone = true;
  bool floor_slack = false;  // target satisfied strictly below the first probe
};

// Smallest v in [kSplitFloor, 1] with log_curve(v) >= log_target. Bisection
// assumes the curve is nondecreasing; a coarse 16-point grid validates that
// first and a left-to-right refinement scan takes over when it fails, flagged
// rather than silent.
template <class LogCurve>
SplitSearch find_min_split(LogCurve&& log_curve, double log_target) {
  constexpr int grid_points = 16;
  constexpr double v_tol = 2e-7;
  std::vector<double> grid(grid_points);
  std::vector<double> values(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    grid[i] = std::pow(10.0, -6.0 + 6.0 * i / (grid_points - 1.0));
    values[i] = log_curve(grid[i]);
  }
  grid.back() = 1.0;  // guard against pow roundoff at the right edge

  SplitSearch out;
  for (int i = 0; i + 1 < grid_points; ++i) {
    // compare as probabilities with the documented 1e-9 slack
    if (std::exp(values[i + 1]) < std::exp(values[i]) - 1e-9) {
      out.monotone = false;
      break;
    }
  }
  if (values.front() >= log_target) {
    out.v_star = grid.front();
    out.floor_slack = values.front() > log_target;
    return out;
  }
  if (values.back() < log_target)
    throw infeasible_error("coverage target unreachable even with the full split (v = 1)");

  if (out.monotone) {
    double lo = grid.front();
    double hi = 1.0;
    while (hi - lo > v_tol) {
      const double mid = 0.5 * (lo + hi);
      (log_curve(mid) >= log_target ? hi : lo) = mid;
    }
    out.v_star = hi;
    return out;
  }
  // Non-monotone fallback: walk the coarse cells left to right; inside each,
  // scan a linear grid and refine left of the first satisfying point. Finds
  // the leftmost crossing down to features a few scan levels thin.
  for (int cell = 1; cell < grid_points; ++cell) {
    double lo = grid[cell - 1];
    double hi = grid[cell];
    bool bracketed = false;
    while (hi - lo > v_tol) {
      const double step = (hi - lo) / (grid_points - 1.0);
      int hit = -1;
      for (int i = 1; i < grid_points; ++i) {
        if (log_curve(lo + step * i) >= log_target) {
          hit = i;
          break;
        }
      }
      if (hit < 0) break;  // nothing satisfying at this resolution
      hi = lo + step * hit;
      lo = lo + step * (hit - 1);
      bracketed = true;
    }
    if (bracketed) {
      out.v_star = hi;
      return out;
    }
  }
  out.v_star = 1.0;  // curve(1) >= target was verified above
  return out;
}

}  // namespace detail

// Minimal split meeting coverage >= exp(log_eta), for targets that may lie far
// below double-precision range (deeply noise-limited sweeps).
inline SplitSolution optimal_split_log(const NetworkParams& p, const SicConfig& sic, double log_eta,
                                       const QuadratureSpec& spec = {}) {
  p.validate();
  sic.validate();
  if (!std::isfinite(log_eta) || !(log_eta < 0.0))
    throw config_error("log coverage target must be finite and negative");
  const SicCoverageCurve curve(p, sic, spec);
  const auto search = detail::find_min_split([&](double v) { return curve.log_value(v); }, log_eta);

  NetworkParams at = p;
  at.v = search.v_star;
  SplitSolution sol;
  sol.v_star = search.v_star;
  sol.energy = avg_harvested_energy(at);
  sol.coverage_at_v_star = std::exp(curve.log_value(search.v_star));
  sol.monotone_bracket = search.monotone;
  sol.constraint_active = !search.floor_slack;
  if (!(sol.coverage_at_v_star >= std::exp(log_eta) - 1e-6))
    throw numerical_error("split search lost feasibility at its own solution");
  return sol;
}

inline SplitSolution optimal_split(const NetworkParams& p, const SicConfig& sic, double eta,
                                   const QuadratureSpec& spec = {}) {
  if (!(eta > 0.0 && eta < 1.0)) throw config_error("coverage target must lie strictly in (0, 1)");
  return optimal_split_log(p, sic, std::log(eta), spec);
}

// Energy unlocked by cancellation relative to the configured baseline split.
inline double energy_gain_log(const NetworkParams& p, const SicConfig& sic, double log_eta,
                              const QuadratureSpec& spec = {}) {
  const SplitSolution sol = optimal_split_log(p, sic, log_eta, spec);
  const double baseline = avg_harvested_energy(p);
  const double gain = sol.energy - baseline;
  // the split tolerance can leave a vanishing negative residue
  if (gain < 0.0 && gain > -1e-6 * std::abs(baseline)) return 0.0;
  return gain;
}

inline double energy_gain(const NetworkParams& p, const SicConfig& sic, double eta,
                          const QuadratureSpec& spec = {}) {
  if (!(eta > 0.0 && eta < 1.0)) throw config_error("coverage target must lie strictly in (0, 1)");
  return energy_gain_log(p, sic, std::log(eta), spec);
}

// Default target: the baseline coverage without cancellation at the current split.
inline double energy_gain(const NetworkParams& p, const SicConfig& sic) {
  return energy_gain_log(p, sic, log_coverage_no_sic(p));
}

}  // namespace swiptsic
