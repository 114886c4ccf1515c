#include "psi/representation.hpp"

namespace psi {

LineRepresentation realize(const ProjectivePlane& plane) {
  LineRepresentation rep;
  rep.n = plane.n;
  rep.q = plane.q;
  rep.line_vertices = plane.line_points;
  rep.line_edges.resize(rep.line_vertices.size());
  rep.line_of_edge.assign(static_cast<size_t>(edge_count(rep.n)), -1);

  for (size_t l = 0; l < rep.line_vertices.size(); ++l) {
    const auto& verts = rep.line_vertices[l];
    auto& edges = rep.line_edges[l];
    edges.reserve(verts.size() * (verts.size() - 1) / 2);
    for (size_t i = 0; i < verts.size(); ++i) {
      for (size_t j = i + 1; j < verts.size(); ++j) {
        Edge e = make_edge(verts[i], verts[j]);
        edges.push_back(e);
        auto idx = static_cast<size_t>(edge_index(rep.n, e.u, e.v));
        if (rep.line_of_edge[idx] != -1) {
          throw InternalConstructionFailure(
              "edge assigned to two lines; plane incidence is corrupt");
        }
        rep.line_of_edge[idx] = static_cast<int>(l);
      }
    }
  }
  for (int owner : rep.line_of_edge) {
    if (owner == -1) {
      throw InternalConstructionFailure(
          "line edge sets do not cover E(K_n); plane incidence is corrupt");
    }
  }
  return rep;
}

int LineRepresentation::line_through(int u, int v) const {
  Edge e = make_edge(u, v);
  if (e.u < 0 || e.v >= n) throw Error("vertex out of range");
  return line_of_edge[static_cast<size_t>(edge_index(n, e.u, e.v))];
}

Vertex LineRepresentation::common_vertex(int line_a, int line_b) const {
  const auto& a = line_vertices[static_cast<size_t>(line_a)];
  const auto& b = line_vertices[static_cast<size_t>(line_b)];
  int found = -1;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      if (found != -1) {
        throw InternalConstructionFailure("lines share two vertices");
      }
      found = a[i];
      ++i;
      ++j;
    }
  }
  if (found == -1) {
    throw InternalConstructionFailure("lines share no vertex");
  }
  return found;
}

}  // namespace psi
