#pragma once

#include <vector>

#include "psi/errors.hpp"

namespace psi {

// Exact arithmetic in GF(p^k). Elements are ints in [0, q): the base-p digits
// of the value are the polynomial coefficients, least significant digit =
// constant term. Immutable after construction, safe for concurrent reads.
struct FieldContext {
  int p = 0;  // prime characteristic
  int k = 0;  // extension degree
  int q = 0;  // order, p^k
  int reduction_poly = 0;  // monic irreducible of degree k, digit encoding

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int pow(int a, long long e) const;
  int inv(int a) const;  // throws ZeroInverse on a == 0
};

// Builds GF(q) for a prime power q <= 32 from a fixed table of reduction
// polynomials. Throws NotAPrimePower / UnsupportedOrder.
FieldContext make_field(int q);

bool is_prime(int x);

// Decomposes q = p^k with p prime; returns false if q is not a prime power.
bool prime_power_decompose(int q, int* p_out, int* k_out);

// Trial division against every monic polynomial of degree in [1, deg/2].
bool poly_irreducible(int poly, int p, int deg);

// Orders accepted by make_field, ascending.
const std::vector<int>& supported_prime_powers();

}  // namespace psi
