#include "psi/coloring_types.hpp"

#include <algorithm>

namespace psi {

Edge make_edge(int a, int b) {
  if (a == b) throw SameVertex("edge endpoints coincide: " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Color EdgeColoring::at(int u, int v) const {
  Edge e = make_edge(u, v);
  if (e.u < 0 || e.v >= n) throw Error("vertex out of range");
  return color_of[static_cast<size_t>(edge_index(n, e.u, e.v))];
}

void EdgeColoring::set(int u, int v, Color c) {
  Edge e = make_edge(u, v);
  if (e.u < 0 || e.v >= n) throw Error("vertex out of range");
  if (c < 0 || c > k) throw Error("color out of range: " + std::to_string(c));
  color_of[static_cast<size_t>(edge_index(n, e.u, e.v))] = c;
}

bool EdgeColoring::total() const {
  return std::all_of(color_of.begin(), color_of.end(),
                     [](Color c) { return c != 0; });
}

long long EdgeColoring::colored_count() const {
  return std::count_if(color_of.begin(), color_of.end(),
                       [](Color c) { return c != 0; });
}

bool ColorPartition::is_partition_of(int k) const {
  std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
  long long covered = 0;
  for (const auto& cls : classes) {
    for (Color c : cls) {
      if (c < 1 || c > k) return false;
      if (seen[static_cast<size_t>(c)]) return false;
      seen[static_cast<size_t>(c)] = 1;
      ++covered;
    }
  }
  return covered == k;
}

}  // namespace psi
