#pragma once

#include <compare>
#include <string>
#include <vector>

#include "psi/errors.hpp"

namespace psi {

using Vertex = int;
using Color = int;  // global colors are 1-based; 0 marks an uncolored edge

struct Edge {
  int u = -1;
  int v = -1;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonical form u < v; throws SameVertex on a == b.
Edge make_edge(int a, int b);

inline long long edge_count(int n) {
  return static_cast<long long>(n) * (n - 1) / 2;
}

// Row-major upper-triangular index of the canonical edge (u,v), 0 <= u < v < n.
inline long long edge_index(int n, int u, int v) {
  return static_cast<long long>(u) * n -
         static_cast<long long>(u) * (u + 1) / 2 + (v - u - 1);
}

// An edge coloring of K_n with colors drawn from [k].
struct EdgeColoring {
  int n = 0;
  int k = 0;
  int q = 0;  // plane order behind the construction; 0 if none
  std::string provenance;
  std::vector<Color> color_of;  // size edge_count(n); 0 = uncolored

  EdgeColoring() = default;
  EdgeColoring(int n_, int k_)
      : n(n_), k(k_), color_of(static_cast<size_t>(edge_count(n_)), 0) {}

  Color at(int u, int v) const;
  void set(int u, int v, Color c);  // c == 0 clears the edge
  bool total() const;
  long long colored_count() const;
};

// Per-line palettes: classes[line] lists the colors that line is responsible
// for owning.
struct ColorPartition {
  std::vector<std::vector<Color>> classes;

  bool is_partition_of(int k) const;  // pairwise disjoint and covering [k]
};

}  // namespace psi
