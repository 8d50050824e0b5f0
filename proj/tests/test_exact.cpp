#include "isospec/error.hpp"
#include "isospec/exact.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace isospec;

TEST_SUITE("exact") {
  TEST_CASE("pi enclosure") {
    for (int digits : {5, 20, 60, 100}) {
      const Interval p = pi_interval(digits);
      CHECK(p.lo < p.hi);
      CHECK(p.width() <= Rational(1) / boost::multiprecision::pow(BigInt(10), digits));
      CHECK(to_double(p.lo) <= std::numbers::pi);
      CHECK(to_double(p.hi) >= std::numbers::pi);
    }
    // 355/113 overshoots pi by about 2.7e-7.
    CHECK(pi_interval(10).hi < Rational(355, 113));
    CHECK(Rational(333, 106) < pi_interval(10).lo);
  }

  TEST_CASE("square root enclosure") {
    const Interval r = sqrt_interval(Rational(2), 30);
    CHECK(r.lo * r.lo <= 2);
    CHECK(r.hi * r.hi >= 2);
    CHECK(r.width() <= Rational(1) / boost::multiprecision::pow(BigInt(10), 30));
    const Interval exact = sqrt_interval(Rational(9, 4), 30);
    CHECK(exact.contains(Rational(3, 2)));
  }

  TEST_CASE("interval arithmetic") {
    const Interval a{1, 2};
    const Interval b{-1, 3};
    const Interval prod = a * b;
    CHECK(prod.lo == -2);
    CHECK(prod.hi == 6);
    CHECK((a - b).lo == -2);
    CHECK((a - b).hi == 3);
    CHECK_THROWS_AS(a / b, DomainError);
    CHECK(certainly_less(Interval{0, 1}, Interval{Rational(3, 2), 2}));
    CHECK_FALSE(certainly_less(Interval{0, 1}, Interval{1, 2}));
  }

  TEST_CASE("surd normalization and sign") {
    const Surd s = Surd::sqrt_of(Rational(8));
    CHECK(s.radicand() == 2);
    CHECK(s.surd_coefficient() == 2);
    CHECK(Surd::sqrt_of(Rational(9, 4)).is_rational());

    const Surd golden(Rational(1, 2), Rational(1, 2), 5);
    CHECK(golden * golden == golden + Surd(Rational(1)));
    CHECK(golden.sign() == 1);
    // 3 - 2 sqrt(2) > 0, 2 - 3 sqrt(2)/2 < 0
    CHECK(Surd(Rational(3), Rational(-2), 2).sign() == 1);
    CHECK(Surd(Rational(2), Rational(-3, 2), 2).sign() == -1);
    CHECK(Surd(Rational(0), Rational(0), 7).sign() == 0);
    CHECK((Surd(Rational(1), Rational(1), 3) / Surd(Rational(0), Rational(1), 3)).to_double() ==
          doctest::Approx(1.0 / std::sqrt(3.0) + 1.0));
  }

  TEST_CASE("surd bounds contain the value") {
    const Surd s(Rational(-7, 3), Rational(5, 11), 13);
    const Interval b = s.bounds(40);
    const double v = -7.0 / 3.0 + 5.0 / 11.0 * std::sqrt(13.0);
    CHECK(to_double(b.lo) <= v + 1e-15);
    CHECK(to_double(b.hi) >= v - 1e-15);
    CHECK(s.to_double() == doctest::Approx(v).epsilon(1e-15));
  }

  TEST_CASE("integer form") {
    const Surd s(Rational(1, 2), Rational(-1, 4), 2);
    const Surd::IntegerForm f = s.integer_form();
    CHECK(f.num_a == 2);
    CHECK(f.num_b == -1);
    CHECK(f.den == 4);
    CHECK(f.radicand == 2);
  }

  TEST_CASE("pi monomials") {
    const PiMonomial half{Rational(3, 4), 1};
    CHECK(half.to_double() == doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-15));
    const PiMonomial sq = half * half;
    CHECK(sq.half_power == 2);
    CHECK(sq.coefficient == Rational(9, 16));
    const Interval b = sq.bounds(30);
    CHECK(to_double(b.lo) <= 9.0 / 16.0 * std::numbers::pi);
    CHECK(to_double(b.hi) >= 9.0 / 16.0 * std::numbers::pi);
  }
}
