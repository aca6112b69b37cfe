#pragma once
// Special functions and quadrature backing the coverage integrals: the
// distance pdf of the n-th nearest point of a planar Poisson process, the
// Gauss hypergeometric function on the negative real axis, and adaptive
// Gauss-Kronrod integration over semi-infinite ranges.

#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "swiptsic/errors.hpp"

namespace swiptsic {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(rel_tol > 0.0)) throw config_error("rel_tol must be positive");
    if (!(abs_tol >= 0.0)) throw config_error("abs_tol must be nonnegative");
    if (max_subdivisions < 1) throw config_error("max_subdivisions must be at least 1");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair: abscissa, Gauss weight, Kronrod weight.
inline constexpr double kGaussKronrod15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

template <class F>
inline void gauss_kronrod_15(F&& f, double a, double b, double& value, double& error) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double y0 = f(mid);
  double g7 = kGaussKronrod15[0][1] * y0;
  double k15 = kGaussKronrod15[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGaussKronrod15[i][0];
    const double y = f(mid + dx) + f(mid - dx);
    g7 += kGaussKronrod15[i][1] * y;
    k15 += kGaussKronrod15[i][2] * y;
  }
  value = k15 * half;
  // |K15 - G7| is a deliberately conservative bound; the usual (200|d|)^1.5
  // sharpening can report less error than the panel actually carries.
  error = std::abs((k15 - g7) * half);
}

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. The worst panel is
// split until the accumulated error estimate meets the spec; running out of
// subdivisions raises numerical_error instead of returning a value of
// unknown quality.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !(a <= b))
    throw config_error("integration bounds must be finite and ordered");
  if (a == b) return {};

  std::priority_queue<detail::Panel> panels;
  detail::Panel root{a, b, 0.0, 0.0};
  detail::gauss_kronrod_15(f, a, b, root.value, root.error);
  double total_value = root.value;
  double total_error = root.error;
  panels.push(root);

  int splits = 0;
  const double eps = std::numeric_limits<double>::epsilon();
  while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value))) {
    if (splits >= spec.max_subdivisions)
      throw numerical_error("quadrature did not converge within the subdivision budget");
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.b - worst.a > eps * std::max({std::abs(worst.a), std::abs(worst.b), 1.0})))
      throw numerical_error("quadrature stalled on a panel below floating-point resolution");
    detail::Panel left{worst.a, mid, 0.0, 0.0};
    detail::Panel right{mid, worst.b, 0.0, 0.0};
    detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.error);
    detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.error);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++splits;
  }
  if (!std::isfinite(total_value))
    throw numerical_error("integrand produced a non-finite value");
  return {total_value, total_error, splits};
}

// Integral of f over [lower, infinity) via the substitution r = lower + u/(1-u),
// which compresses the tail into u in [0, 1). Intended for integrands with
// exponential or power-law decay.
template <class F>
QuadratureResult integrate_semi_infinite(F&& f, double lower, const QuadratureSpec& spec = {}) {
  if (!std::isfinite(lower)) throw config_error("lower bound must be finite");
  auto mapped = [&f, lower](double u) {
    const double w = 1.0 - u;
    const double r = lower + u / w;
    if (!std::isfinite(r)) return 0.0;  // u rounded onto 1; the tail has already decayed
    const double y = f(r);
    return y == 0.0 ? 0.0 : y / (w * w);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, spec);
}

// Probability density of the distance from the origin to the n-th nearest
// point of a homogeneous planar Poisson process of density lambda. Evaluated
// in log space so large n and extreme radii do not overflow intermediates.
inline double nn_distance_pdf(double r, int n, double lambda) {
  if (n < 1) throw config_error("neighbor order n must be at least 1");
  if (!(lambda > 0.0)) throw config_error("density must be positive");
  if (!(r >= 0.0)) throw config_error("distance must be nonnegative");
  if (r == 0.0) return 0.0;
  const double pl = std::numbers::pi * lambda;
  const double log_pdf = std::numbers::ln2 + n * std::log(pl) - std::lgamma(static_cast<double>(n)) +
                         (2.0 * n - 1.0) * std::log(r) - pl * r * r;
  return std::exp(log_pdf);
}

namespace detail {

// Maclaurin series of 2F1; requires |x| < 1.
inline double hyp2f1_series(double a, double b, double c, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 4000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) return sum;
  }
  throw numerical_error("hypergeometric series did not converge");
}

inline double distance_to_integer(double x) { return std::abs(x - std::round(x)); }

// 1/Gamma(x), with the poles at nonpositive integers mapped to 0.
inline double reciprocal_gamma(double x) {
  if (x <= 0.0 && distance_to_integer(x) < 1e-12) return 0.0;
  return 1.0 / std::tgamma(x);
}

}  // namespace detail

// Gauss hypergeometric function 2F1(a, b; c; z) for z <= 0, restricted to
// c > b > 0. Uses the defining series near the origin, the Pfaff
// transformation for moderate arguments, and the z -> 1/z connection formula
// beyond, which keeps full accuracy for |z| up to 1e12 and more.
inline double gauss_2f1_neg(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
    throw config_error("hypergeometric parameters must be finite");
  if (z > 0.0) throw config_error("gauss_2f1_neg supports z <= 0 only");
  if (!(c > b && b > 0.0)) throw config_error("gauss_2f1_neg requires c > b > 0");
  if (z == 0.0) return 1.0;
  if (z >= -0.5) return detail::hyp2f1_series(a, b, c, z);
  if (z >= -4.0) {
    const double w = z / (z - 1.0);  // in (1/3, 4/5]
    return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, w);
  }
  if (detail::distance_to_integer(a - b) < 0.05)
    throw numerical_error("gauss_2f1_neg: a - b too close to an integer for the large-argument expansion");
  const double x = 1.0 / z;
  const double t1 = std::tgamma(c) * std::tgamma(b - a) * detail::reciprocal_gamma(b) *
                    detail::reciprocal_gamma(c - a) * std::pow(-z, -a) *
                    detail::hyp2f1_series(a, a - c + 1.0, a - b + 1.0, x);
  const double t2 = std::tgamma(c) * std::tgamma(a - b) * detail::reciprocal_gamma(a) *
                    detail::reciprocal_gamma(c - b) * std::pow(-z, -b) *
                    detail::hyp2f1_series(b, b - c + 1.0, b - a + 1.0, x);
  return t1 + t2;
}

}  // namespace swiptsic
