#include "psi/verifier.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace psi {

namespace {

void require_total_in_range(const EdgeColoring& col) {
  for (Color c : col.color_of) {
    if (c == 0) {
      throw PartialColoringError("coloring leaves edges uncolored");
    }
    if (c < 0 || c > col.k) {
      throw Error("edge color " + std::to_string(c) + " outside [1, " +
                  std::to_string(col.k) + "]");
    }
  }
}

// Union-find over the vertices touched by one color class.
struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

std::vector<std::vector<Edge>> edges_by_color(const EdgeColoring& col) {
  std::vector<std::vector<Edge>> classes(static_cast<size_t>(col.k) + 1);
  long long idx = 0;
  for (int u = 0; u < col.n; ++u) {
    for (int v = u + 1; v < col.n; ++v, ++idx) {
      Color c = col.color_of[static_cast<size_t>(idx)];
      if (c >= 1 && c <= col.k) classes[static_cast<size_t>(c)].push_back({u, v});
    }
  }
  return classes;
}

bool class_connected_union_find(const std::vector<Edge>& edges, int n) {
  if (edges.empty()) return true;  // vacuously connected; completeness flags it
  DisjointSet dsu(n);
  std::vector<char> touched(static_cast<size_t>(n), 0);
  for (const Edge& e : edges) {
    touched[static_cast<size_t>(e.u)] = touched[static_cast<size_t>(e.v)] = 1;
    dsu.unite(e.u, e.v);
  }
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (!touched[static_cast<size_t>(v)]) continue;
    int r = dsu.find(v);
    if (root == -1) root = r;
    if (r != root) return false;
  }
  return true;
}

bool class_connected_bfs(const std::vector<Edge>& edges, int n) {
  if (edges.empty()) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::vector<char> touched(static_cast<size_t>(n), 0);
  for (const Edge& e : edges) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
    touched[static_cast<size_t>(e.u)] = touched[static_cast<size_t>(e.v)] = 1;
  }
  std::vector<int> queue{edges[0].u};
  std::vector<char> seen(static_cast<size_t>(n), 0);
  seen[static_cast<size_t>(edges[0].u)] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int w : adj[static_cast<size_t>(queue[head])]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (touched[static_cast<size_t>(v)] && !seen[static_cast<size_t>(v)]) return false;
  }
  return true;
}

}  // namespace

std::vector<boost::dynamic_bitset<>> owned_color_sets(const EdgeColoring& col) {
  std::vector<boost::dynamic_bitset<>> owned(
      static_cast<size_t>(col.n),
      boost::dynamic_bitset<>(static_cast<size_t>(col.k) + 1));
  long long idx = 0;
  for (int u = 0; u < col.n; ++u) {
    for (int v = u + 1; v < col.n; ++v, ++idx) {
      Color c = col.color_of[static_cast<size_t>(idx)];
      if (c >= 1 && c <= col.k) {
        owned[static_cast<size_t>(u)].set(static_cast<size_t>(c));
        owned[static_cast<size_t>(v)].set(static_cast<size_t>(c));
      }
    }
  }
  return owned;
}

CompletenessCheck check_complete_serial(const EdgeColoring& col) {
  require_total_in_range(col);
  // Per-color vertex sets; a pair of colors meets iff the sets intersect.
  std::vector<boost::dynamic_bitset<>> vertices_of(
      static_cast<size_t>(col.k) + 1,
      boost::dynamic_bitset<>(static_cast<size_t>(col.n)));
  long long idx = 0;
  for (int u = 0; u < col.n; ++u) {
    for (int v = u + 1; v < col.n; ++v, ++idx) {
      Color c = col.color_of[static_cast<size_t>(idx)];
      vertices_of[static_cast<size_t>(c)].set(static_cast<size_t>(u));
      vertices_of[static_cast<size_t>(c)].set(static_cast<size_t>(v));
    }
  }
  for (Color a = 1; a <= col.k; ++a) {
    for (Color b = a + 1; b <= col.k; ++b) {
      if (!vertices_of[static_cast<size_t>(a)].intersects(
              vertices_of[static_cast<size_t>(b)])) {
        return {false, {a, b}};
      }
    }
  }
  return {};
}

CompletenessCheck check_complete(const EdgeColoring& col) {
  require_total_in_range(col);
  const int k = col.k;
  auto owned = owned_color_sets(col);

  // covered[c] accumulates the colors meeting c; each thread owns a stripe of
  // rows, so the OR writes never race.
  std::vector<boost::dynamic_bitset<>> covered(
      static_cast<size_t>(k) + 1,
      boost::dynamic_bitset<>(static_cast<size_t>(k) + 1));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int c = 1; c <= k; ++c) {
    auto& row = covered[static_cast<size_t>(c)];
    for (int v = 0; v < col.n; ++v) {
      if (owned[static_cast<size_t>(v)].test(static_cast<size_t>(c))) {
        row |= owned[static_cast<size_t>(v)];
      }
    }
  }

  // Scanning rows upward and reporting the first missing partner above the
  // row index yields the lexicographically first violating pair.
  for (Color a = 1; a <= k; ++a) {
    boost::dynamic_bitset<> missing = covered[static_cast<size_t>(a)];
    missing.flip();
    size_t b = missing.find_next(static_cast<size_t>(a));
    if (b != boost::dynamic_bitset<>::npos && b <= static_cast<size_t>(k)) {
      return {false, {a, static_cast<Color>(b)}};
    }
  }
  return {};
}

ConnectivityCheck check_connected_serial(const EdgeColoring& col) {
  auto classes = edges_by_color(col);
  for (Color c = 1; c <= col.k; ++c) {
    if (!class_connected_bfs(classes[static_cast<size_t>(c)], col.n)) {
      return {false, c};
    }
  }
  return {};
}

ConnectivityCheck check_connected(const EdgeColoring& col) {
  auto classes = edges_by_color(col);
  std::vector<char> bad(static_cast<size_t>(col.k) + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (int c = 1; c <= col.k; ++c) {
    if (!class_connected_union_find(classes[static_cast<size_t>(c)], col.n)) {
      bad[static_cast<size_t>(c)] = 1;
    }
  }
  for (Color c = 1; c <= col.k; ++c) {
    if (bad[static_cast<size_t>(c)]) return {false, c};
  }
  return {};
}

std::vector<Color> owners_of(const EdgeColoring& col, Vertex v) {
  if (v < 0 || v >= col.n) throw Error("vertex out of range");
  boost::dynamic_bitset<> owned(static_cast<size_t>(col.k) + 1);
  for (int w = 0; w < col.n; ++w) {
    if (w == v) continue;
    Color c = col.at(v, w);
    if (c >= 1 && c <= col.k) owned.set(static_cast<size_t>(c));
  }
  std::vector<Color> out;
  for (size_t c = owned.find_first(); c != boost::dynamic_bitset<>::npos;
       c = owned.find_next(c)) {
    out.push_back(static_cast<Color>(c));
  }
  return out;
}

bool is_owner(const EdgeColoring& col, const std::vector<Vertex>& subgraph,
              const std::vector<Color>& colors) {
  auto owned = owned_color_sets(col);
  for (Vertex v : subgraph) {
    if (v < 0 || v >= col.n) throw Error("vertex out of range");
    for (Color c : colors) {
      if (c < 1 || c > col.k || !owned[static_cast<size_t>(v)].test(static_cast<size_t>(c))) {
        return false;
      }
    }
  }
  return true;
}

Lemma2Check check_lemma2_premise(const EdgeColoring& col,
                                 const LineRepresentation& rep,
                                 const ColorPartition& partition) {
  auto owned = owned_color_sets(col);
  for (size_t line = 0; line < rep.line_vertices.size(); ++line) {
    const auto& palette =
        line < partition.classes.size() ? partition.classes[line] : std::vector<Color>{};
    for (Vertex v : rep.line_vertices[line]) {
      for (Color c : palette) {
        if (c < 1 || c > col.k ||
            !owned[static_cast<size_t>(v)].test(static_cast<size_t>(c))) {
          return {false, static_cast<int>(line), v, c};
        }
      }
    }
  }
  return {};
}

std::vector<long long> class_sizes(const EdgeColoring& col) {
  std::vector<long long> sizes(static_cast<size_t>(col.k) + 1, 0);
  for (Color c : col.color_of) {
    if (c >= 0 && c <= col.k) ++sizes[static_cast<size_t>(c)];
  }
  return sizes;
}

VerifyReport verify(const EdgeColoring& col, const LineRepresentation* rep,
                    const ColorPartition* partition, bool want_connected) {
  VerifyReport report;
  report.completeness = check_complete(col);
  if (want_connected) {
    report.connectivity = check_connected(col);
    report.connectivity_checked = true;
  }
  report.sizes = class_sizes(col);
  if (rep != nullptr && partition != nullptr) {
    report.lemma2 = check_lemma2_premise(col, *rep, *partition);
    report.lemma2_checked = true;
    if (report.lemma2.holds && partition->is_partition_of(col.k) &&
        !report.completeness.complete) {
      report.internally_consistent = false;
    }
  }
  return report;
}

}  // namespace psi
