#pragma once

// Exact arithmetic used by the certificates: big rationals, rigorous rational
// enclosures of irrational constants, quadratic surds and rational multiples
// of powers of sqrt(pi).

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace isospec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);
std::string to_string(const Rational& r);

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& r) { return {r, r}; }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational width() const { return hi - lo; }
  double midpoint() const { return to_double((lo + hi) / 2); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DomainError when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

/// a.hi < b.lo: a is below b for every choice of points.
inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi < b.lo; }

/// Enclosure of pi with width 10^-digits; digits must lie in [1, 100].
Interval pi_interval(int digits);
/// Enclosure of sqrt(r) for r >= 0 with width at most 10^-digits.
Interval sqrt_interval(const Rational& r, int digits);
/// Enclosure of sqrt(x) for every x in [i.lo, i.hi], i.lo >= 0.
Interval sqrt_interval(const Interval& i, int digits);

/// Exact real number a + b*sqrt(d), d >= 1 an integer with square factors removed.
class Surd {
 public:
  Surd() = default;
  Surd(Rational a) : a_(std::move(a)) {}
  Surd(Rational a, Rational b, BigInt d);

  /// sqrt(r) as a surd, r >= 0.
  static Surd sqrt_of(const Rational& r);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const BigInt& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  /// Exact sign: -1, 0 or +1.
  int sign() const;
  double to_double() const;
  Interval bounds(int digits) const;
  /// (num_a + num_b*sqrt(d)) / den with integers, den > 0 and gcd(num_a, num_b, den) = 1.
  struct IntegerForm {
    BigInt num_a;
    BigInt num_b;
    BigInt den;
    BigInt radicand;
  };
  IntegerForm integer_form() const;

  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x);
  /// Defined when the radicands match or one operand is rational.
  friend Surd operator*(const Surd& x, const Surd& y);
  /// Division by a nonzero rational, or by a surd with the same radicand.
  friend Surd operator/(const Surd& x, const Surd& y);
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }

 private:
  void normalize();
  static BigInt common_radicand(const Surd& x, const Surd& y);

  Rational a_{0};
  Rational b_{0};
  BigInt d_{1};
};

/// coefficient * sqrt(pi)^half_power: the exact shape of Gamma and Beta at half-integers.
struct PiMonomial {
  Rational coefficient{1};
  int half_power = 0;

  double to_double() const;
  Interval bounds(int digits) const;
};

PiMonomial operator*(const PiMonomial& a, const PiMonomial& b);
PiMonomial operator/(const PiMonomial& a, const PiMonomial& b);

}  // namespace isospec
