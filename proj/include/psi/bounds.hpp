#pragma once

#include "psi/errors.hpp"

namespace psi {

// Exact rational arithmetic for the analytic bounds. Numerators stay below
// ~2n^2 and denominators below 2n, so long long components with __int128
// cross-multiplied comparisons are exact for every n this artifact handles.
struct Rational {
  long long num = 0;
  long long den = 1;  // > 0, reduced

  static Rational make(long long num, long long den);
  long long floor_value() const;
  double to_double() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);

// k <= f(n,x): a coloring whose smallest class has x edges has at most
// n(n-1)/2x classes.
Rational f_bound(long long n, long long x);
// k <= g(n,x) = (x+1)(n-x-1/2): classes incident to a smallest (tree) class.
Rational g_bound(long long n, long long x);

struct Theorem1Bound {
  long long bound = 0;   // floor(max_x min{f,g})
  long long x_star = 0;  // first natural maximizer
};

// Upper bound for the connected index: floor of max over natural x in [1,n]
// of min{f(n,x), g(n,x)}, in exact arithmetic. Valid as a bound for n >= 8.
Theorem1Bound theorem1_bound(long long n);

// Real crossing point of f and g: sqrt(n/2 + 1/16) - 1/4.
double lemma1_x0(long long n);
// Closed-form value of the real optimum: (n-1)(sqrt(n/2 + 1/16) + 1/4).
double theorem2_value(long long n);

double f_real(long long n, double x);
double g_real(long long n, double x);

struct LowerBound {
  int q = 0;
  long long value = 0;  // ceil(q/2) * (q^2+q+1)
};

// Best connected lower bound reachable through a supported plane order:
// the largest supported prime power q with q^2+q+1 <= n. Throws TooSmall for
// n < 7.
LowerBound best_connected_lower_bound(long long n);

struct BoundReport {
  long long n = 0;
  long long theorem1 = 0;
  long long x_star = 0;
  double x0 = 0.0;
  double theorem2 = 0.0;
  LowerBound best_lower;       // q == 0 when n < 7
  bool upper_bound_regime = false;  // n >= 8
};

BoundReport bound_report(long long n);

}  // namespace psi
