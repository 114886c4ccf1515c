#include "psi/field.hpp"

#include <algorithm>
#include <array>

namespace psi {

namespace {

// Polynomials over GF(p) encoded as ints: digit i in base p is the
// coefficient of x^i. Small enough orders that everything fits comfortably.

constexpr int kMaxOrder = 32;

int poly_degree(int poly, int p) {
  int d = -1;
  for (int i = 0; poly != 0; ++i, poly /= p) {
    if (poly % p != 0) d = i;
  }
  return d;
}

int poly_coeff(int poly, int p, int i) {
  while (i-- > 0) poly /= p;
  return poly % p;
}

int pow_int(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

int poly_add(int a, int b, int p) {
  int r = 0, scale = 1;
  while (a != 0 || b != 0) {
    r += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

int poly_scale_coeff(int a, int s, int p) {
  int r = 0, scale = 1;
  while (a != 0) {
    r += ((a % p) * s % p) * scale;
    a /= p;
    scale *= p;
  }
  return r;
}

int poly_negate(int a, int p) { return poly_scale_coeff(a, p - 1, p); }

// a * x^t
int poly_shift(int a, int p, int t) { return a * pow_int(p, t); }

// Raw product, no reduction.
int poly_mul(int a, int b, int p) {
  int r = 0;
  for (int i = 0; b != 0; ++i, b /= p) {
    int coeff = b % p;
    if (coeff != 0) r = poly_add(r, poly_shift(poly_scale_coeff(a, coeff, p), p, i), p);
  }
  return r;
}

// Remainder of a modulo the monic polynomial `mod` of degree `deg`.
int poly_rem(int a, int mod, int p, int deg) {
  int da = poly_degree(a, p);
  while (da >= deg) {
    int lead = poly_coeff(a, p, da);
    int sub = poly_shift(poly_scale_coeff(mod, lead, p), p, da - deg);
    a = poly_add(a, poly_negate(sub, p), p);
    da = poly_degree(a, p);
  }
  return a;
}

struct IrreducibleEntry {
  int p, k, poly;
};

// Fixed reduction polynomials per extension; chosen once for determinism.
constexpr std::array<IrreducibleEntry, 7> kReductionTable = {{
    {2, 2, 0b111},     // x^2 + x + 1
    {2, 3, 0b1011},    // x^3 + x + 1
    {2, 4, 0b10011},   // x^4 + x + 1
    {2, 5, 0b100101},  // x^5 + x^2 + 1
    {3, 2, 10},        // x^2 + 1
    {3, 3, 34},        // x^3 + 2x + 1
    {5, 2, 31},        // x^2 + x + 1
}};

}  // namespace

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

bool prime_power_decompose(int q, int* p_out, int* k_out) {
  if (q < 2) return false;
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself prime
  int k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

bool poly_irreducible(int poly, int p, int deg) {
  if (poly_degree(poly, p) != deg) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    int lo = pow_int(p, d);   // smallest monic of degree d: x^d
    int hi = 2 * lo;          // monic means leading digit 1
    for (int div = lo; div < hi; ++div) {
      if (poly_rem(poly, div, p, d) == 0) return false;
    }
  }
  return true;
}

FieldContext make_field(int q) {
  int p = 0, k = 0;
  if (!prime_power_decompose(q, &p, &k)) {
    throw NotAPrimePower("q = " + std::to_string(q) + " is not a prime power");
  }
  if (q > kMaxOrder) {
    throw UnsupportedOrder("q = " + std::to_string(q) +
                           " exceeds the supported maximum of " +
                           std::to_string(kMaxOrder));
  }
  FieldContext field;
  field.p = p;
  field.k = k;
  field.q = q;
  if (k == 1) {
    field.reduction_poly = p;  // the polynomial x
    return field;
  }
  for (const auto& entry : kReductionTable) {
    if (entry.p == p && entry.k == k) {
      field.reduction_poly = entry.poly;
      if (!poly_irreducible(entry.poly, p, k)) {
        throw InternalConstructionFailure("reduction polynomial table entry for GF(" +
                                          std::to_string(q) + ") is reducible");
      }
      return field;
    }
  }
  throw UnsupportedOrder("no reduction polynomial on file for GF(" +
                         std::to_string(q) + ")");
}

int FieldContext::add(int a, int b) const {
  if (k == 1) return (a + b) % p;
  return poly_add(a, b, p);
}

int FieldContext::neg(int a) const {
  if (k == 1) return (p - a) % p;
  return poly_negate(a, p);
}

int FieldContext::sub(int a, int b) const { return add(a, neg(b)); }

int FieldContext::mul(int a, int b) const {
  if (k == 1) return (a * b) % p;
  return poly_rem(poly_mul(a, b, p), reduction_poly, p, k);
}

int FieldContext::pow(int a, long long e) const {
  int r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int FieldContext::inv(int a) const {
  if (a == 0) throw ZeroInverse("0 has no multiplicative inverse");
  return pow(a, q - 2);
}

const std::vector<int>& supported_prime_powers() {
  static const std::vector<int> orders = [] {
    std::vector<int> v;
    for (int q = 2; q <= kMaxOrder; ++q) {
      if (prime_power_decompose(q, nullptr, nullptr)) v.push_back(q);
    }
    return v;
  }();
  return orders;
}

}  // namespace psi
