#include "psi/bounds.hpp"

#include <cmath>
#include <numeric>

#include "psi/field.hpp"

namespace psi {

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

long long Rational::floor_value() const {
  long long d = num / den;
  if (num % den != 0 && num < 0) --d;
  return d;
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rational f_bound(long long n, long long x) {
  return Rational::make(n * (n - 1), 2 * x);
}

Rational g_bound(long long n, long long x) {
  return Rational::make((x + 1) * (2 * n - 2 * x - 1), 2);
}

Theorem1Bound theorem1_bound(long long n) {
  if (n < 2) throw TooSmall("theorem1_bound needs n >= 2");
  // g_n(x) < 0 once x >= n while min{f,g} at x = 1 is positive, and the real
  // optimum sits near sqrt(n/2), so the natural maximizer lies in [1, n].
  Rational best = Rational::make(-1, 1);
  long long best_x = 0;
  for (long long x = 1; x <= n; ++x) {
    Rational fx = f_bound(n, x);
    Rational gx = g_bound(n, x);
    Rational low = fx < gx ? fx : gx;
    if (best < low) {
      best = low;
      best_x = x;
    }
  }
  return {best.floor_value(), best_x};
}

double lemma1_x0(long long n) {
  return std::sqrt(static_cast<double>(n) / 2.0 + 1.0 / 16.0) - 0.25;
}

double theorem2_value(long long n) {
  return static_cast<double>(n - 1) *
         (std::sqrt(static_cast<double>(n) / 2.0 + 1.0 / 16.0) + 0.25);
}

double f_real(long long n, double x) {
  return static_cast<double>(n) * static_cast<double>(n - 1) / (2.0 * x);
}

double g_real(long long n, double x) {
  return (x + 1.0) * (static_cast<double>(n) - x - 0.5);
}

LowerBound best_connected_lower_bound(long long n) {
  if (n < 7) {
    throw TooSmall("no plane-based bound below n = 7, got n = " + std::to_string(n));
  }
  int best_q = 0;
  for (int q : supported_prime_powers()) {
    if (static_cast<long long>(q) * q + q + 1 <= n) best_q = q;
  }
  long long m = static_cast<long long>(best_q) * best_q + best_q + 1;
  return {best_q, static_cast<long long>((best_q + 1) / 2) * m};
}

BoundReport bound_report(long long n) {
  BoundReport report;
  report.n = n;
  Theorem1Bound t1 = theorem1_bound(n);
  report.theorem1 = t1.bound;
  report.x_star = t1.x_star;
  report.x0 = lemma1_x0(n);
  report.theorem2 = theorem2_value(n);
  report.upper_bound_regime = n >= 8;
  if (n >= 7) report.best_lower = best_connected_lower_bound(n);
  return report;
}

}  // namespace psi
