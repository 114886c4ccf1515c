#include <doctest.h>

#include <set>

#include "psi/representation.hpp"

using psi::build_plane;
using psi::LineRepresentation;
using psi::make_field;
using psi::realize;

namespace {
LineRepresentation rep_for(int q) { return realize(build_plane(make_field(q))); }
}  // namespace

TEST_CASE("q=2: 7 lines of K_3, 21 edges total") {
  LineRepresentation rep = rep_for(2);
  CHECK(rep.n == 7);
  CHECK(rep.line_edges.size() == 7);
  long long total = 0;
  for (const auto& edges : rep.line_edges) {
    CHECK(edges.size() == 3);
    total += static_cast<long long>(edges.size());
  }
  CHECK(total == psi::edge_count(7));
}

TEST_CASE("q=4: 21 lines of K_5 partition the 210 edges") {
  LineRepresentation rep = rep_for(4);
  long long total = 0;
  for (const auto& edges : rep.line_edges) {
    CHECK(edges.size() == 10);
    total += static_cast<long long>(edges.size());
  }
  CHECK(total == psi::edge_count(21));
}

TEST_CASE("q=3: every edge of K_13 lies in exactly one line") {
  LineRepresentation rep = rep_for(3);
  for (int u = 0; u < rep.n; ++u) {
    for (int v = u + 1; v < rep.n; ++v) {
      int hits = 0;
      for (const auto& edges : rep.line_edges) {
        for (const auto& e : edges) {
          if (e.u == u && e.v == v) ++hits;
        }
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("any two lines share exactly one vertex") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    LineRepresentation rep = rep_for(q);
    for (size_t a = 0; a < rep.line_vertices.size(); ++a) {
      for (size_t b = a + 1; b < rep.line_vertices.size(); ++b) {
        std::set<int> inter;
        std::set<int> av(rep.line_vertices[a].begin(), rep.line_vertices[a].end());
        for (int v : rep.line_vertices[b]) {
          if (av.count(v)) inter.insert(v);
        }
        CHECK(inter.size() == 1);
        CHECK(*inter.begin() ==
              rep.common_vertex(static_cast<int>(a), static_cast<int>(b)));
      }
    }
  }
}

TEST_CASE("line_through agrees with an exhaustive scan") {
  LineRepresentation rep = rep_for(2);
  for (size_t l = 0; l < rep.line_edges.size(); ++l) {
    for (const auto& e : rep.line_edges[l]) {
      CHECK(rep.line_through(e.u, e.v) == static_cast<int>(l));
      CHECK(rep.line_through(e.v, e.u) == static_cast<int>(l));
    }
  }
  CHECK_THROWS_AS(rep.line_through(3, 3), psi::SameVertex);
}
