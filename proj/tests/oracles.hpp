#pragma once
// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <swiptsic/swiptsic.hpp>

namespace oracles {

// Euler-integral route for the hypergeometric family with c = b + 1:
//   F(a, b; b+1; z) = b * int_0^1 t^(b-1) (1 - z t)^(-a) dt
// and the substitution t = s^(1/b) removes the endpoint singularity, leaving
//   F = int_0^1 (1 - z s^(1/b))^(-a) ds.
inline double euler_2f1(double a, double b, double c, double z) {
  if (std::abs(c - (b + 1.0)) > 1e-12) throw std::logic_error("euler_2f1 expects c = b + 1");
  swiptsic::QuadratureSpec spec{1e-12, 1e-15, 4000};
  auto integrand = [a, b, z](double s) {
    return std::pow(1.0 - z * std::pow(s, 1.0 / b), -a);
  };
  return swiptsic::integrate_adaptive(integrand, 0.0, 1.0, spec).value;
}

struct McEstimate {
  double mean = 0.0;
  double se = 0.0;
};

// P[the n-th nearest interferer can be decoded], with the useful signal
// counted as interference. Direct event simulation; no quadrature involved.
inline McEstimate mc_decode_nth(const swiptsic::NetworkParams& p, int n, long long trials,
                                std::uint64_t seed) {
  swiptsic::SimConfig cfg;
  cfg.trials = trials;
  cfg.master_seed = seed;
  long long hits = 0;
  for (long long t = 0; t < trials; ++t) {
    swiptsic::Realization real = swiptsic::sample_realization(p, cfg, t);
    auto& nodes = real.interferers;
    if (static_cast<int>(nodes.size()) < n) continue;
    std::sort(nodes.begin(), nodes.end(),
              [](const auto& a, const auto& b) { return a.distance < b.distance; });
    double beyond = 0.0;
    for (std::size_t i = static_cast<std::size_t>(n); i < nodes.size(); ++i)
      beyond += nodes[i].fade / (1.0 + std::pow(nodes[i].distance, p.alpha));
    const auto& target = nodes[static_cast<std::size_t>(n - 1)];
    const double target_rx = target.fade / (1.0 + std::pow(target.distance, p.alpha));
    const double interference = beyond + real.useful_fade / p.tau();
    const double sinr = p.v * p.p_t * target_rx /
                        (p.v * (p.sigma2 + p.p_t * interference) + p.sigma2_c);
    if (sinr >= p.theta) ++hits;
  }
  const double mean = static_cast<double>(hits) / static_cast<double>(trials);
  return {mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(trials))};
}

// P[the useful signal is decodable once the n nearest interferers are gone].
inline McEstimate mc_cancel_coverage(const swiptsic::NetworkParams& p, int n, long long trials,
                                     std::uint64_t seed) {
  swiptsic::SimConfig cfg;
  cfg.trials = trials;
  cfg.master_seed = seed;
  long long hits = 0;
  for (long long t = 0; t < trials; ++t) {
    swiptsic::Realization real = swiptsic::sample_realization(p, cfg, t);
    auto& nodes = real.interferers;
    std::sort(nodes.begin(), nodes.end(),
              [](const auto& a, const auto& b) { return a.distance < b.distance; });
    double beyond = 0.0;
    for (std::size_t i = static_cast<std::size_t>(std::min<long long>(n, nodes.size()));
         i < nodes.size(); ++i)
      beyond += nodes[i].fade / (1.0 + std::pow(nodes[i].distance, p.alpha));
    const double sinr = p.v * p.p_t * real.useful_fade / p.tau() /
                        (p.v * (p.sigma2 + p.p_t * beyond) + p.sigma2_c);
    if (sinr >= p.theta) ++hits;
  }
  const double mean = static_cast<double>(hits) / static_cast<double>(trials);
  return {mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(trials))};
}

}  // namespace oracles
