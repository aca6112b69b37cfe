#pragma once
// Canonical parameter set shared by the analytic, simulation and optimization
// layers. Everything is stored in linear units; decibel conversion happens at
// the configuration boundary only.

#include <cmath>

#include "swiptsic/errors.hpp"

namespace swiptsic {

namespace detail {
inline void require(bool ok, const char* msg) {
  if (!ok) throw config_error(msg);
}
}  // namespace detail

inline double from_decibels(double x_db) {
  detail::require(std::isfinite(x_db), "decibel value must be finite");
  return std::pow(10.0, x_db / 10.0);
}

inline double to_decibels(double x) {
  detail::require(x > 0.0, "only positive values have a decibel representation");
  return 10.0 * std::log10(x);
}

struct NetworkParams {
  double lambda = 1e-3;                 // transmitter density [nodes / unit area]
  double p_t = from_decibels(50.0);     // transmit power, linear scale
  double d0 = 10.0;                     // transmitter-receiver pair distance [m]
  double alpha = 4.0;                   // path-loss exponent, must exceed 2
  double theta = from_decibels(-5.0);   // SINR decoding threshold, linear scale
  double sigma2 = 1.0;                  // antenna noise variance
  double sigma2_c = 1.0;                // RF-to-baseband conversion noise variance
  double v = 0.5;                       // power-splitting fraction routed to the decoder
  double zeta = 1.0;                    // RF-to-DC conversion efficiency

  // Path-loss normalization of the useful link: received power is p_t/tau().
  double tau() const { return 1.0 + std::pow(d0, alpha); }

  void validate() const {
    detail::require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and nonnegative");
    detail::require(std::isfinite(p_t) && p_t > 0.0, "p_t must be positive");
    detail::require(std::isfinite(d0) && d0 > 0.0, "d0 must be positive");
    detail::require(std::isfinite(alpha) && alpha > 2.0, "alpha must exceed 2");
    detail::require(std::isfinite(theta) && theta > 0.0, "theta must be positive");
    detail::require(std::isfinite(sigma2) && sigma2 >= 0.0, "sigma2 must be nonnegative");
    detail::require(std::isfinite(sigma2_c) && sigma2_c >= 0.0, "sigma2_c must be nonnegative");
    detail::require(v > 0.0 && v <= 1.0, "v must lie in (0, 1]");
    detail::require(zeta > 0.0 && zeta <= 1.0, "zeta must lie in (0, 1]");
  }
};

// How the receiver ranks interfering signals when picking the next one to
// decode. Distance order is the classical modeling assumption; instantaneous
// power order is offered for sensitivity studies.
enum class InterfererOrdering { ByDistance, ByInstantaneousPower };

struct SicConfig {
  int n_max = 1;  // maximum number of interferers the receiver may cancel
  InterfererOrdering ordering = InterfererOrdering::ByDistance;

  void validate() const { detail::require(n_max >= 0, "n_max must be nonnegative"); }
};

}  // namespace swiptsic
