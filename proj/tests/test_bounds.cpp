#include <doctest.h>

#include <cmath>

#include "psi/bounds.hpp"

using psi::f_bound;
using psi::g_bound;
using psi::Rational;

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational::make(6, 4) == Rational::make(3, 2));
  CHECK(Rational::make(3, -2).den == 2);
  CHECK(Rational::make(7, 2).floor_value() == 3);
  CHECK(Rational::make(-7, 2).floor_value() == -4);
  CHECK(Rational::make(1, 3) < Rational::make(1, 2));
  CHECK_THROWS_AS(Rational::make(1, 0), psi::Error);
}

TEST_CASE("f and g at the pinned points") {
  CHECK(f_bound(8, 2) == Rational::make(14, 1));
  CHECK(g_bound(8, 1) == Rational::make(13, 1));
  CHECK(f_bound(7, 1) == Rational::make(21, 1));
  CHECK(g_bound(7, 1) == Rational::make(11, 1));
}

TEST_CASE("theorem1_bound against a brute-force oracle") {
  // oracle expected values computed by the same exhaustive definition but in
  // plain double arithmetic with a rational tie check
  auto oracle = [](long long n) {
    double best = -1;
    for (long long x = 1; x <= n; ++x) {
      double f = static_cast<double>(n) * (n - 1) / (2.0 * x);
      double g = (x + 1.0) * (n - x - 0.5);
      best = std::max(best, std::min(f, g));
    }
    return static_cast<long long>(std::floor(best + 1e-9));
  };
  CHECK(psi::theorem1_bound(8).bound == 14);
  CHECK(psi::theorem1_bound(8).x_star == 2);
  CHECK(psi::theorem1_bound(9).bound == 18);
  for (long long n : {8, 9, 10, 13, 21, 57, 100, 273}) {
    CAPTURE(n);
    CHECK(psi::theorem1_bound(n).bound == oracle(n));
  }
}

TEST_CASE("x_star maximizes min{f,g} over the natural range") {
  for (long long n : {8, 12, 31, 100}) {
    auto t1 = psi::theorem1_bound(n);
    Rational fx = f_bound(n, t1.x_star);
    Rational gx = g_bound(n, t1.x_star);
    Rational best = fx < gx ? fx : gx;
    for (long long x = 1; x <= n; ++x) {
      Rational f = f_bound(n, x);
      Rational g = g_bound(n, x);
      Rational low = f < g ? f : g;
      CHECK_FALSE(best < low);
    }
  }
}

TEST_CASE("critical point and closed form") {
  CHECK(psi::lemma1_x0(8) == doctest::Approx(1.7655644).epsilon(1e-6));
  CHECK(psi::theorem2_value(8) == doctest::Approx(15.8589509).epsilon(1e-6));

  for (long long n = 8; n <= 200; ++n) {
    double x0 = psi::lemma1_x0(n);
    double f = psi::f_real(n, x0);
    double g = psi::g_real(n, x0);
    CHECK(std::abs(f - g) / f < 1e-9);
    // n = 2*x0^2 + x0
    CHECK(std::abs(2 * x0 * x0 + x0 - static_cast<double>(n)) / n < 1e-9);
    // the closed form equals g evaluated at the critical point
    CHECK(std::abs(psi::theorem2_value(n) - g) / g < 1e-9);
  }
}

TEST_CASE("best connected lower bound") {
  CHECK_THROWS_AS(psi::best_connected_lower_bound(6), psi::TooSmall);
  psi::LowerBound b7 = psi::best_connected_lower_bound(7);
  CHECK(b7.q == 2);
  CHECK(b7.value == 7);
  psi::LowerBound b13 = psi::best_connected_lower_bound(13);
  CHECK(b13.q == 3);
  CHECK(b13.value == 26);
  psi::LowerBound b20 = psi::best_connected_lower_bound(20);
  CHECK(b20.q == 3);
  CHECK(b20.value == 26);
}

TEST_CASE("upper bound dominates the lower bound for n in 8..300") {
  for (long long n = 8; n <= 300; ++n) {
    CAPTURE(n);
    CHECK(psi::theorem1_bound(n).bound >= psi::best_connected_lower_bound(n).value);
  }
}

TEST_CASE("asymptotic ratio approaches 1/sqrt(2)") {
  const double target = 1.0 / std::sqrt(2.0);
  for (long long n : {10000LL, 1000000LL}) {
    double ratio = psi::theorem2_value(n) / std::pow(static_cast<double>(n), 1.5);
    CHECK(std::abs(ratio - target) / target < 0.02);
  }
}

TEST_CASE("bound_report bundles everything") {
  psi::BoundReport r = psi::bound_report(13);
  CHECK(r.theorem1 == 31);
  CHECK(r.best_lower.q == 3);
  CHECK(r.best_lower.value == 26);
  CHECK(r.upper_bound_regime);
  psi::BoundReport small = psi::bound_report(5);
  CHECK_FALSE(small.upper_bound_regime);
  CHECK(small.best_lower.q == 0);
}
