#include "isospec/exact.hpp"

#include "isospec/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cmath>

namespace isospec {

namespace mp = boost::multiprecision;

namespace {

// 105 decimals of pi, truncated.
constexpr const char* kPiDigits =
    "314159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808";

BigInt pow10(int e) { return mp::pow(BigInt(10), static_cast<unsigned>(e)); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

double to_double(const Rational& r) {
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;
  // Scale so the integer quotient carries at least 64 significant bits.
  const long shift = 64 - (static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)));
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  const double value = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -value : value;
}

std::string to_string(const Rational& r) { return r.str(); }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval pi_interval(int digits) {
  if (digits < 1 || digits > 100) throw DomainError("pi enclosure supports 1..100 digits");
  const BigInt scaled(std::string(kPiDigits, kPiDigits + digits + 1));
  const BigInt scale = pow10(digits);
  return {Rational(scaled, scale), Rational(scaled + 1, scale)};
}

Interval sqrt_interval(const Rational& r, int digits) {
  if (r < 0) throw DomainError("square root of a negative rational");
  const BigInt scale = pow10(digits);
  const BigInt n = floor_div(mp::numerator(r) * scale * scale, mp::denominator(r));
  const BigInt s = mp::sqrt(n);
  return {Rational(s, scale), Rational(s + 1, scale)};
}

Interval sqrt_interval(const Interval& i, int digits) {
  if (i.lo < 0) throw DomainError("square root of an interval reaching below zero");
  return {sqrt_interval(i.lo, digits).lo, sqrt_interval(i.hi, digits).hi};
}

Surd::Surd(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw DomainError("surd radicand must be nonnegative");
  normalize();
}

void Surd::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 1;
    return;
  }
  BigInt factor = 1;
  for (BigInt i = 2; i * i <= d_ && i < 1000000; ++i) {
    const BigInt sq = i * i;
    while (d_ % sq == 0) {
      d_ /= sq;
      factor *= i;
    }
  }
  const BigInt root = mp::sqrt(d_);
  if (root * root == d_) {
    factor *= root;
    d_ = 1;
  }
  b_ *= factor;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

Surd Surd::sqrt_of(const Rational& r) {
  if (r < 0) throw DomainError("square root of a negative rational");
  const BigInt p = mp::numerator(r);
  const BigInt q = mp::denominator(r);
  return Surd(0, Rational(1, q), p * q);
}

BigInt Surd::common_radicand(const Surd& x, const Surd& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_) throw DomainError("surd arithmetic across different radicands");
  return x.d_;
}

int Surd::sign() const {
  const int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
  const int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational diff = a_ * a_ - b_ * b_ * Rational(d_);
  if (diff == 0) return 0;
  return diff > 0 ? sa : sb;
}

double Surd::to_double() const {
  return isospec::to_double(a_) + isospec::to_double(b_) * std::sqrt(d_.convert_to<double>());
}

Interval Surd::bounds(int digits) const {
  if (b_ == 0) return Interval::point(a_);
  return Interval::point(a_) + Interval::point(b_) * sqrt_interval(Rational(d_), digits);
}

Surd::IntegerForm Surd::integer_form() const {
  const BigInt da = mp::denominator(a_);
  const BigInt db = mp::denominator(b_);
  BigInt den = mp::lcm(da, db);
  BigInt na = mp::numerator(a_) * (den / da);
  BigInt nb = mp::numerator(b_) * (den / db);
  BigInt g = mp::gcd(mp::gcd(na, nb), den);
  if (g < 0) g = -g;
  if (g > 1) {
    na /= g;
    nb /= g;
    den /= g;
  }
  return {na, nb, den, d_};
}

Surd operator+(const Surd& x, const Surd& y) {
  const BigInt d = Surd::common_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x) { return Surd(-x.a_, -x.b_, x.d_); }
Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  const BigInt d = Surd::common_radicand(x, y);
  const Rational rd(d);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * rd, x.a_ * y.b_ + x.b_ * y.a_, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  if (y.sign() == 0) throw DomainError("surd division by zero");
  if (y.b_ == 0) return Surd(x.a_ / y.a_, x.b_ / y.a_, x.d_);
  const Surd conj(y.a_, -y.b_, y.d_);
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.d_);
  const Surd num = x * conj;
  return Surd(num.a_ / norm, num.b_ / norm, num.d_);
}

double PiMonomial::to_double() const {
  return isospec::to_double(coefficient) * std::pow(std::sqrt(M_PI), half_power);
}

Interval PiMonomial::bounds(int digits) const {
  const Interval pi = pi_interval(digits);
  Interval factor = Interval::point(1);
  const int whole = std::abs(half_power) / 2;
  for (int i = 0; i < whole; ++i) factor = factor * pi;
  if (std::abs(half_power) % 2 == 1) factor = factor * sqrt_interval(pi, digits);
  const Interval c = Interval::point(coefficient);
  return half_power >= 0 ? c * factor : c / factor;
}

PiMonomial operator*(const PiMonomial& a, const PiMonomial& b) {
  return {a.coefficient * b.coefficient, a.half_power + b.half_power};
}

PiMonomial operator/(const PiMonomial& a, const PiMonomial& b) {
  if (b.coefficient == 0) throw DomainError("division by a zero pi-monomial");
  return {a.coefficient / b.coefficient, a.half_power - b.half_power};
}

}  // namespace isospec
