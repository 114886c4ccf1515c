#pragma once

#include <vector>

#include "psi/coloring_types.hpp"
#include "psi/plane.hpp"

namespace psi {

// K_n with the plane's points as vertices. Each line induces a K_{q+1}; the
// line edge sets partition E(K_n) and two lines always share exactly one
// vertex. Immutable after construction.
struct LineRepresentation {
  int n = 0;
  int q = 0;
  std::vector<std::vector<Vertex>> line_vertices;
  std::vector<std::vector<Edge>> line_edges;
  std::vector<int> line_of_edge;  // edge_index -> line id

  // The unique line containing both vertices; throws SameVertex on u == v.
  int line_through(int u, int v) const;

  // The unique vertex two distinct lines share.
  Vertex common_vertex(int line_a, int line_b) const;
};

LineRepresentation realize(const ProjectivePlane& plane);

}  // namespace psi
