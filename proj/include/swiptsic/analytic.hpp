#pragma once
// Closed-form and integral expressions for coverage and harvested energy in a
// Poisson bipolar network with power-splitting SWIPT receivers that may apply
// successive interference cancellation: Laplace transforms of the aggregate
// interference, per-stage decode and post-cancellation coverage, their
// composition, and the mean-interference energy formulas.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "swiptsic/errors.hpp"
#include "swiptsic/params.hpp"
#include "swiptsic/specfun.hpp"

namespace swiptsic {

// Coverage figures for one parameter point.
struct CoverageBreakdown {
  double pi_nc = 0.0;        // useful-signal coverage with no cancellation
  std::vector<double> pi_d;  // pi_d[j-1]: decode probability of the j-th nearest interferer, j = 1..n
  std::vector<double> pi_c;  // pi_c[j]: coverage after removing the j nearest interferers, j = 0..n
  double pi_sic = 0.0;       // coverage of the full cancellation procedure
};

namespace detail {

inline double csc(double x) { return 1.0 / std::sin(x); }

// Quadrature output that is a probability by construction: a deviation beyond
// tolerance indicates a defective integrand rather than roundoff, so it is
// reported instead of clamped.
inline double as_probability(double x, const char* what) {
  constexpr double tol = 1e-9;
  if (!(x >= -tol && x <= 1.0 + tol))
    throw numerical_error(std::string(what) + " escaped [0,1]: " + std::to_string(x));
  return std::clamp(x, 0.0, 1.0);
}

// Exponent E(s) of the interference Laplace transform exp(-E(s)) over the
// whole plane, for unit-mean exponential fades and the bounded path-loss law.
inline double interference_exponent_full(double s, const NetworkParams& p) {
  if (s == 0.0 || p.lambda == 0.0) return 0.0;
  constexpr double pi = std::numbers::pi;
  return (2.0 / p.alpha) * p.lambda * pi * pi * s * std::pow(1.0 + s, 2.0 / p.alpha - 1.0) *
         csc(2.0 * pi / p.alpha);
}

// Exponent of the Laplace transform of the interference generated beyond
// radius r. Below a tiny radius the excluded disc carries no appreciable
// interference mass and the full-plane exponent is substituted, which also
// keeps the hypergeometric argument away from overflow.
inline double interference_exponent_outside(double s, double r, const NetworkParams& p) {
  constexpr double tiny_radius = 1e-8;
  if (s == 0.0 || p.lambda == 0.0) return 0.0;
  if (r <= tiny_radius) return interference_exponent_full(s, p);
  constexpr double pi = std::numbers::pi;
  const double arg = -(1.0 + s) / std::pow(r, p.alpha);
  const double h = gauss_2f1_neg(1.0, 1.0 - 2.0 / p.alpha, 2.0 - 2.0 / p.alpha, arg);
  return 2.0 * pi * p.lambda * s * std::pow(r, 2.0 - p.alpha) / (p.alpha - 2.0) * h;
}

// (theta * tau / p_t) * (sigma^2 + sigma_c^2 / v), the noise part of the
// coverage exponent.
inline double noise_exponent(const NetworkParams& p) {
  return p.theta * p.tau() / p.p_t * (p.sigma2 + p.sigma2_c / p.v);
}

// Distance average of the truncated interference transform after removing the
// n nearest interferers. Does not depend on the split v; the noise
// exponential is applied by the caller.
inline double cancel_integral(const NetworkParams& p, int n, const QuadratureSpec& spec) {
  const double s = p.theta * p.tau();
  auto integrand = [&p, n, s](double r) {
    const double pdf = nn_distance_pdf(r, n, p.lambda);
    if (pdf == 0.0) return 0.0;
    return pdf * std::exp(-interference_exponent_outside(s, r, p));
  };
  return integrate_semi_infinite(integrand, 0.0, spec).value;
}

// Distance average for decoding the n-th nearest interferer, with the leading
// exp(-(theta/p_t) * sigma_eff) factored out by the caller. The useful signal
// enters the decode SINR as an extra unit-mean exponential interferer, which
// contributes the 1/(1 + theta * xi / tau) factor.
inline double decode_integral(const NetworkParams& p, int n, double sigma_eff,
                              const QuadratureSpec& spec) {
  const double tau = p.tau();
  const double noise_rate = p.theta / p.p_t * sigma_eff;
  auto integrand = [&p, n, tau, noise_rate](double r) {
    const double pdf = nn_distance_pdf(r, n, p.lambda);
    if (pdf == 0.0) return 0.0;
    const double r_alpha = std::pow(r, p.alpha);
    const double xi = 1.0 + r_alpha;
    const double useful_factor = 1.0 / (1.0 + p.theta * xi / tau);
    return pdf * useful_factor *
           std::exp(-noise_rate * r_alpha - interference_exponent_outside(p.theta * xi, r, p));
  };
  return integrate_semi_infinite(integrand, 0.0, spec).value;
}

inline double log_sum_exp(const std::vector<double>& xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - m);
  return m + std::log(sum);
}

}  // namespace detail

// E[exp(-s I)] for the aggregate interference of the whole plane.
inline double laplace_interference_full(double s, const NetworkParams& p) {
  p.validate();
  if (!(s >= 0.0)) throw config_error("laplace argument must be nonnegative");
  return std::exp(-detail::interference_exponent_full(s, p));
}

// E[exp(-s I)] for the interference generated by transmitters farther than r.
inline double laplace_interference_outside(double s, double r, const NetworkParams& p) {
  p.validate();
  if (!(s >= 0.0)) throw config_error("laplace argument must be nonnegative");
  if (!(r > 0.0))
    throw config_error("radius must be positive; use laplace_interference_full for the whole plane");
  return std::exp(-detail::interference_exponent_outside(s, r, p));
}

// log of coverage_no_sic, exact even where the linear value underflows.
inline double log_coverage_no_sic(const NetworkParams& p) {
  p.validate();
  return -detail::noise_exponent(p) -
         detail::interference_exponent_full(p.theta * p.tau(), p);
}

// Coverage probability of a receiver that does not cancel anything.
inline double coverage_no_sic(const NetworkParams& p) { return std::exp(log_coverage_no_sic(p)); }

// Probability of decoding the n-th nearest interferer, with the useful signal
// treated as additional interference in the decode SINR.
inline double coverage_decode_nth(const NetworkParams& p, int n, const QuadratureSpec& spec = {}) {
  p.validate();
  spec.validate();
  if (n < 1) throw config_error("decode stage n must be at least 1");
  if (p.lambda == 0.0) return 0.0;  // nothing to decode in an empty network
  const double sigma_eff = p.sigma2 + p.sigma2_c / p.v;
  const double value =
      std::exp(-p.theta / p.p_t * sigma_eff) * detail::decode_integral(p, n, sigma_eff, spec);
  return detail::as_probability(value, "decode coverage");
}

// Coverage of the useful signal once the n nearest interferers are removed.
// n = 0 is exactly coverage_no_sic. An empty network degenerates to the
// noise-only coverage for every n.
inline double coverage_after_cancel(const NetworkParams& p, int n, const QuadratureSpec& spec = {}) {
  p.validate();
  spec.validate();
  if (n < 0) throw config_error("cancellation count must be nonnegative");
  if (n == 0) return coverage_no_sic(p);
  if (p.lambda == 0.0) return std::exp(-detail::noise_exponent(p));
  const double value = std::exp(-detail::noise_exponent(p)) * detail::cancel_integral(p, n, spec);
  return detail::as_probability(value, "post-cancellation coverage");
}

// Full breakdown of the cancellation procedure up to sic.n_max stages. The
// procedure succeeds either immediately or after decoding interferers 1..i
// and failing the useful decode at every earlier stage, so the i-th term is
// prod_{j<i}(1 - pi_c[j]) * prod_{j<=i} pi_d[j] * pi_c[i].
inline CoverageBreakdown coverage_sic(const NetworkParams& p, const SicConfig& sic,
                                      const QuadratureSpec& spec = {}) {
  p.validate();
  sic.validate();
  CoverageBreakdown out;
  out.pi_nc = coverage_no_sic(p);
  out.pi_c.push_back(out.pi_nc);
  for (int j = 1; j <= sic.n_max; ++j) {
    out.pi_d.push_back(coverage_decode_nth(p, j, spec));
    out.pi_c.push_back(coverage_after_cancel(p, j, spec));
  }
  double total = out.pi_nc;
  double missed = 1.0;   // running prod of useful-decode failures
  double decoded = 1.0;  // running prod of interferer decodes
  for (int i = 1; i <= sic.n_max; ++i) {
    missed *= 1.0 - out.pi_c[i - 1];
    decoded *= out.pi_d[i - 1];
    total += missed * decoded * out.pi_c[i];
  }
  out.pi_sic = detail::as_probability(total, "sic coverage");
  return out;
}

// Mean aggregate interference at the typical receiver (Campbell average of
// the bounded path-loss law against unit-mean fades).
inline double mean_interference(const NetworkParams& p) {
  p.validate();
  constexpr double pi = std::numbers::pi;
  return (2.0 / p.alpha) * pi * pi * p.lambda * detail::csc(2.0 * pi / p.alpha);
}

// Average energy harvested per slot by the typical receiver.
inline double avg_harvested_energy(const NetworkParams& p) {
  p.validate();
  return p.zeta * (1.0 - p.v) * p.p_t * (1.0 / p.tau() + mean_interference(p));
}

// Harvested energy in the limit of a vanishing decoder share, optionally also
// collapsing the pair distance. Upper-bounds avg_harvested_energy for any v.
inline double harvested_energy_upper_bound(const NetworkParams& p, bool zero_pair_distance = false) {
  p.validate();
  const double direct = zero_pair_distance ? 1.0 : 1.0 / p.tau();
  return p.zeta * p.p_t * (direct + mean_interference(p));
}

// Coverage of the cancellation procedure as a function of the split v, with
// the v-independent distance integrals cached so root finding over v stays
// cheap. Evaluates in log space so deeply noise-limited regimes (tiny v, low
// transmit power) remain comparable instead of flushing to zero.
class SicCoverageCurve {
 public:
  SicCoverageCurve(const NetworkParams& params, const SicConfig& sic, const QuadratureSpec& spec = {})
      : base_(params), sic_(sic), spec_(spec) {
    base_.validate();
    sic_.validate();
    spec_.validate();
    interference_exponent_ =
        detail::interference_exponent_full(base_.theta * base_.tau(), base_);
    cancel_integrals_.reserve(sic_.n_max);
    for (int j = 1; j <= sic_.n_max; ++j)
      cancel_integrals_.push_back(base_.lambda == 0.0 ? 1.0
                                                      : detail::cancel_integral(base_, j, spec_));
  }

  double log_value(double split) const {
    NetworkParams p = base_;
    p.v = split;
    p.validate();
    const double sigma_eff = p.sigma2 + p.sigma2_c / p.v;
    const double log_noise = -detail::noise_exponent(p);
    const double log_nc = log_noise - interference_exponent_;
    std::vector<double> log_terms{log_nc};
    double log_missed = 0.0;
    double log_decoded = 0.0;
    for (int i = 1; i <= sic_.n_max; ++i) {
      const double log_pc_prev =
          i == 1 ? log_nc : log_noise + std::log(std::min(cancel_integrals_[i - 2], 1.0));
      log_missed += std::log1p(-std::exp(std::min(log_pc_prev, 0.0)));
      if (p.lambda == 0.0) break;  // no interferers: every decode term vanishes
      log_decoded += -p.theta / p.p_t * sigma_eff +
                     std::log(detail::decode_integral(p, i, sigma_eff, spec_));
      const double log_pc = log_noise + std::log(std::min(cancel_integrals_[i - 1], 1.0));
      log_terms.push_back(log_missed + log_decoded + log_pc);
    }
    return detail::log_sum_exp(log_terms);
  }

  double value(double split) const { return std::exp(log_value(split)); }

  const NetworkParams& base() const { return base_; }
  const SicConfig& sic() const { return sic_; }

 private:
  NetworkParams base_;
  SicConfig sic_;
  QuadratureSpec spec_;
  double interference_exponent_ = 0.0;
  std::vector<double> cancel_integrals_;
};

}  // namespace swiptsic
