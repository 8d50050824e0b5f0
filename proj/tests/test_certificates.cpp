#include "isospec/catalog.hpp"
#include "isospec/certificates.hpp"
#include "isospec/error.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace isospec;

namespace {

double beta_ref(double x, double y) { return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y)); }

// log of (2k - 1)!! = 2^k Gamma(k + 1/2) / sqrt(pi)
double log_odd_double_factorial(int k) {
  return k * std::log(2.0) + std::lgamma(k + 0.5) - 0.5 * std::log(std::numbers::pi);
}

double T_ref(int p, int q) {
  const double l = log_odd_double_factorial(q + 1) + log_odd_double_factorial(p + q) + std::log(std::numbers::pi) -
                   std::lgamma(q + 1.0) - std::lgamma(p + q + 1.0) - (p + 2 * q + 1) * std::log(2.0);
  return std::exp(l);
}

// K_alpha by tanh-sinh quadrature of the defining integral (alpha = 2, 3 have smooth integrands).
double K_ref(const MultiplicityPair& p, int alpha, double theta1) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double shift = (alpha - 1) * std::numbers::pi / 4;
  auto f = [&](double x) {
    const double s = std::sin(shift + x);
    return std::pow(std::sin(2 * x), p.m1) * std::pow(std::cos(2 * x), p.m2) / (s * s);
  };
  const double s = std::sin(theta1 + shift);
  return s * s * ts.integrate(f, 0.0, std::numbers::pi / 4);
}

}  // namespace

TEST_SUITE("certificates") {
  TEST_CASE("G examples") {
    const DualValue g22 = compute_G({4, 2, 2});
    CHECK(g22.closed_form == doctest::Approx(std::numbers::pi / 16).epsilon(1e-15));
    CHECK(g22.relative_difference() < 1e-10);
    CHECK(compute_G({4, 1, 1}).closed_form == doctest::Approx(0.5).epsilon(1e-15));
    const DualValue g45 = compute_G({4, 4, 5});
    CHECK(g45.closed_form == doctest::Approx(0.5 * beta_ref(2.5, 3.0)).epsilon(1e-13));
    CHECK(g45.closed_form == doctest::Approx(8.0 / 315.0).epsilon(1e-14));
    CHECK(g45.relative_difference() < 1e-10);
  }

  TEST_CASE("K examples") {
    const MultiplicityPair p{4, 2, 2};
    const double th = minimal_theta1(p).theta1;
    const DualValue G = compute_G(p);
    CHECK(compute_K_alpha(p, 2, th).value < G.closed_form);
    const KValue k1 = compute_K_alpha(p, 1, th);
    REQUIRE(k1.closed_form);
    CHECK(std::abs(k1.value - *k1.closed_form) / *k1.closed_form < 1e-9);
    CHECK_THROWS_AS(compute_K_alpha({4, 1, 4}, 1, minimal_theta1({4, 1, 4}).theta1), DivergenceError);
    CHECK_THROWS_AS(compute_K_alpha({4, 4, 1}, 4, minimal_theta1({4, 4, 1}).theta1), DivergenceError);
  }

  TEST_CASE("K1 closed form against the Beta formula") {
    for (const MultiplicityPair& p : enumerate_admissible(40)) {
      if (p.m1 < 2) continue;
      const MinimalAngle a = minimal_theta1(p);
      const KValue k1 = compute_K_alpha(p, 1, a.theta1);
      const double ref = 0.5 * a.sin2_theta1 *
                         (beta_ref((p.m1 - 1) / 2.0, (p.m2 + 1) / 2.0) + beta_ref((p.m1 - 1) / 2.0, (p.m2 + 2) / 2.0));
      CAPTURE(p.m1);
      CAPTURE(p.m2);
      CHECK(std::abs(k1.value - ref) / ref < 1e-9);
    }
  }

  TEST_CASE("K2 and K3 against tanh-sinh") {
    for (MultiplicityPair p : {MultiplicityPair{4, 2, 2}, {4, 4, 5}, {4, 3, 4}, {4, 9, 6}, {4, 7, 8}, {4, 2, 13}}) {
      const double th = minimal_theta1(p).theta1;
      for (int alpha : {2, 3}) {
        const double ref = K_ref(p, alpha, th);
        CHECK(compute_K_alpha(p, alpha, th).value == doctest::Approx(ref).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("S examples") {
    CHECK(std::abs(compute_S({4, 2, 2}) - 8.0 / (3.0 * std::numbers::pi)) < 1e-12);
    const PiMonomial s22 = compute_S_exact({4, 2, 2});
    CHECK(s22.coefficient == Rational(8, 3));
    CHECK(s22.half_power == -2);
    CHECK(compute_S({4, 4, 5}) == doctest::Approx(T_ref(2, 2)).epsilon(1e-12));
    CHECK(compute_S({4, 4, 5}) == doctest::Approx(0.80533991363996).epsilon(1e-12));
    // Odd m1: S is a telescoping ratio below one.
    for (int m1 = 3; m1 <= 41; m1 += 2)
      for (int m2 = 2; m2 <= 30; ++m2) CHECK(compute_S({4, m1, m2}) < 1.0);
  }

  TEST_CASE("T monotonicity and limit") {
    for (int p = 1; p <= 30; ++p)
      for (int q = 1; q <= 30; ++q) {
        if (p < 30) CHECK(compute_T(p + 1, q) < compute_T(p, q));
        if (q < 30) CHECK(compute_T(p, q + 1) > compute_T(p, q));
      }
    const double t = compute_T(1, 200);
    CHECK(t > 0.995);
    CHECK(t < 1.0);
    CHECK(compute_T(1, 200) == doctest::Approx(T_ref(1, 200)).epsilon(1e-12));
  }

  TEST_CASE("T equals S under the odd-even correspondence") {
    int count = 0;
    for (int p = 1; p <= 5; ++p)
      for (int q = 1; q <= 4; ++q) {
        CHECK(std::abs(compute_T(p, q) - compute_S({4, 2 * p, 2 * q + 1})) < 1e-12);
        const PiMonomial te = compute_T_exact(p, q), se = compute_S_exact({4, 2 * p, 2 * q + 1});
        CHECK(te.coefficient == se.coefficient);
        CHECK(te.half_power == se.half_power);
        ++count;
      }
    CHECK(count == 20);
  }

  TEST_CASE("A examples") {
    const AValue a22 = compute_A({4, 2, 2});
    CHECK(a22.polynomial_check);
    // m2 (m1 + m2)^3 = 128 >= (m2^2 + m1 m2 + m2 + 1)^2 = 121
    CHECK(2 * 4 * 4 * 4 >= 11 * 11);
    CHECK(a22.value >= 2.0);
    const AValue a45 = compute_A({4, 4, 5});
    const double s = (3.0 - std::sqrt(5.0)) / 6.0;
    CHECK(a45.value == doctest::Approx((20.0 / 18.0) / s * (3.0 / 9.0)).epsilon(1e-13));
    CHECK(a45.value == doctest::Approx(2.909).epsilon(1e-3));
    CHECK(a45.exact.to_double() == doctest::Approx(a45.value).epsilon(1e-14));
    for (int m1 = 2; m1 <= 200; ++m1) {
      CHECK(3 * m1 >= 2 * m1 + 2);
      CHECK(3 * m1 * m1 >= m1 * m1 + 2 * m1 + 3);
      CHECK(m1 * m1 * m1 >= 2 * m1 + 3);
    }
    // Polynomial form and surd value agree in verdict.
    for (const MultiplicityPair& p : enumerate_admissible(64)) {
      if (p.m1 < 2 || p.m2 < 2) continue;
      const AValue a = compute_A(p);
      CHECK(a.polynomial_check == !(a.exact < Surd(Rational(2))));
    }
  }

  TEST_CASE("hypersurface certificates") {
    const HypersurfaceCertificate c = certify_hypersurface({4, 2, 2});
    CHECK(c.overall == Verdict::kPass);
    CHECK(c.paths_agree);
    CHECK(1.0 + c.S == doctest::Approx(1.8488).epsilon(1e-4));
    CHECK(c.n == 8);
    REQUIRE(c.checks.size() == 10);

    for (const MultiplicityPair& p : enumerate_admissible(64)) {
      if (std::min(p.m1, p.m2) < 2) continue;
      const HypersurfaceCertificate h = certify_hypersurface(p);
      CAPTURE(p.m1);
      CAPTURE(p.m2);
      CHECK(h.overall == Verdict::kPass);
      CHECK(h.paths_agree);
      for (const Check& ch : h.checks) {
        CHECK(ch.float_verdict == Verdict::kPass);
        CHECK(ch.exact_verdict == Verdict::kPass);
        CHECK(ch.error < std::abs(ch.margin()));
      }
      // Direct K2, K3 < G.
      CHECK(h.K[1].value < h.G.closed_form);
      CHECK(h.K[2].value < h.G.closed_form);
      for (int a = 0; a < 4; ++a) CHECK(h.ratios[a] < 1.0);
    }

    CHECK_THROWS_AS(certify_hypersurface({4, 1, 5}), DomainError);
    CHECK_THROWS_AS(certify_hypersurface({6, 2, 2}), UnsupportedCase);
  }

  TEST_CASE("focal certificates") {
    const FocalCertificate a = certify_focal({4, 4, 5}, FocalSide::kM1);
    CHECK(a.dim == 14);
    CHECK(a.bound == Rational(160, 9));
    CHECK(a.certified());
    REQUIRE(a.lambda1);
    CHECK(*a.lambda1 == 14);

    const FocalCertificate b = certify_focal({4, 4, 5}, FocalSide::kM2);
    CHECK(b.condition_met);
    CHECK(b.certified());
    REQUIRE(b.lambda1);
    CHECK(*b.lambda1 == 13);

    for (FocalSide side : {FocalSide::kM1, FocalSide::kM2}) {
      const FocalCertificate c = certify_focal({4, 7, 8}, side);
      CHECK(c.certified());
      CHECK(*c.lambda1 == c.dim);
    }

    const FocalCertificate d = certify_focal({4, 1, 1}, FocalSide::kM1);
    CHECK_FALSE(d.condition_met);
    CHECK_FALSE(d.certified());
    CHECK_FALSE(d.lambda1);

    for (const MultiplicityPair& p : enumerate_admissible(64))
      for (const MultiplicityPair& q : {p, MultiplicityPair{4, p.m2, p.m1}})
        for (FocalSide side : {FocalSide::kM1, FocalSide::kM2}) {
          const FocalCertificate c = certify_focal(q, side);
          CHECK(c.condition_met == c.dimension_hypothesis);
          const auto [d1, d2] = focal_dims(q);
          CHECK(c.dim == (side == FocalSide::kM1 ? d1 : d2));
          if (c.condition_met) CHECK(c.inequality_holds);
        }
  }

  TEST_CASE("Solomon comparison") {
    const SolomonReport r = solomon_comparison(2, 6);
    CHECK(r.pair == MultiplicityPair{4, 2, 9});
    CHECK(r.upper == 8);
    CHECK(r.dim_M2 == 13);
    CHECK(r.classification == SolomonClass::kStrictlyLess);
    CHECK(solomon_comparison(4, 3).classification == SolomonClass::kUndetermined);
    for (int k = 3; k <= 22; ++k) {
      const SolomonReport q = solomon_comparison(1, k);
      REQUIRE(q.quotient_lambda1);
      CHECK(*q.quotient_lambda1 == std::min(4, k));
    }
  }

  TEST_CASE("leftover lists") {
    const std::vector<MultiplicityPair> m2{{4, 1, 1}, {4, 1, 2}, {4, 2, 3}, {4, 3, 4}, {4, 4, 7}, {4, 5, 10}, {4, 8, 15}};
    CHECK(focal_leftovers(FocalSide::kM2) == m2);
    const std::vector<MultiplicityPair> m1{{4, 1, 1}, {4, 2, 1}, {4, 4, 3}, {4, 5, 2}, {4, 6, 1}};
    CHECK(focal_leftovers(FocalSide::kM1) == m1);
  }
}
