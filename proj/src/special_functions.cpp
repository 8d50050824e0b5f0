#include "isospec/special_functions.hpp"

#include "isospec/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <limits>

namespace isospec {

PiMonomial gamma_half_integer(int twice_x) {
  if (twice_x < 1) throw DomainError("Gamma at a half-integer requires a positive argument");
  PiMonomial g;
  int k;
  if (twice_x % 2 == 0) {
    g = {Rational(1), 0};
    k = 2;
  } else {
    g = {Rational(1), 1};
    k = 1;
  }
  // Gamma(x + 1) = x Gamma(x), stepping x by one (twice_x by two).
  for (; k < twice_x; k += 2) g.coefficient *= Rational(k, 2);
  return g;
}

PiMonomial beta_half_integer(int twice_x, int twice_y) {
  return gamma_half_integer(twice_x) * gamma_half_integer(twice_y) / gamma_half_integer(twice_x + twice_y);
}

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("Beta requires positive arguments");
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

BetaValue beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("Beta requires positive arguments");
  BetaValue b;
  b.x = x;
  b.y = y;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double tx = 2.0 * x;
  const double ty = 2.0 * y;
  if (tx == std::round(tx) && ty == std::round(ty) && tx < 4096 && ty < 4096) {
    b.exact = beta_half_integer(static_cast<int>(tx), static_cast<int>(ty));
    b.value = b.exact->to_double();
    b.error_bound = 4.0 * eps * b.value;
  } else {
    b.value = boost::math::beta(x, y);
    b.error_bound = 64.0 * eps * b.value;
  }
  return b;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                           unsigned max_depth) {
  QuadratureResult r;
  double l1 = 0.0;
  r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol, &r.error, &l1);
  r.error = std::max(r.error, 16.0 * std::numeric_limits<double>::epsilon() * l1);
  return r;
}

}  // namespace isospec
