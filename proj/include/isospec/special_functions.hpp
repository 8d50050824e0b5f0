#pragma once

#include "isospec/exact.hpp"

#include <functional>
#include <optional>

namespace isospec {

/// Gamma(twice_x / 2) exactly, twice_x >= 1.
PiMonomial gamma_half_integer(int twice_x);

struct BetaValue {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
  /// Absolute error bound on value.
  double error_bound = 0.0;
  /// Present when both arguments are positive half-integers.
  std::optional<PiMonomial> exact;
};

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y); x, y > 0.
BetaValue beta(double x, double y);

/// B(a/2, b/2) exactly, a, b >= 1.
PiMonomial beta_half_integer(int twice_x, int twice_y);

/// log B(x, y) through log-Gamma.
double log_beta(double x, double y);

struct QuadratureResult {
  double value = 0.0;
  /// Kronrod error estimate, floored at a few ulps of the value.
  double error = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12,
                           unsigned max_depth = 15);

}  // namespace isospec
