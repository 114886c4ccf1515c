#pragma once

#include "psi/coloring_types.hpp"
#include "psi/plane.hpp"
#include "psi/representation.hpp"

namespace psi {

struct Construction {
  EdgeColoring coloring;
  ColorPartition partition;  // per plane line, aligned with rep line ids
  ProjectivePlane plane;
  LineRepresentation rep;
};

// Connected and complete coloring of K_{q^2+q+1} with ceil(q/2)*(q^2+q+1)
// colors: each plane line is cut into Hamiltonian cycle classes (q even,
// Type H) or Hamiltonian path classes (q odd, Type P) over its own palette
// block. Throws UnsupportedOrder.
Construction theorem3_coloring(int q);

// Complete coloring of K_{q^2+q+1} with q^3+2q-3 colors for q a power of 2:
// Type C colorings with carefully chosen special edges on most lines, Type 2
// colorings absorbing those special edges as spokes on the rest, and color 1
// on the three leftover edges. Throws UnsupportedOrder.
Construction theorem5_coloring(int q);

int theorem3_color_count(int q);  // ceil(q/2) * (q^2+q+1)
int theorem5_color_count(int q);  // q^3 + 2q - 3

// Connected and complete coloring of K_n, n >= 7: the densest plane
// construction that fits, extended by absorbing the leftover vertices into
// color class 1. Throws TooSmall.
EdgeColoring connected_coloring_best(int n);

// Largest supported prime power with q^2+q+1 <= n.
int largest_fitting_prime_power(int n);  // throws TooSmall for n < 7

}  // namespace psi
