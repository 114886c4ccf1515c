#include "psi/constructions.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "psi/colorings.hpp"

namespace psi {

int theorem3_color_count(int q) { return ((q + 1) / 2) * (q * q + q + 1); }

int theorem5_color_count(int q) { return q * q * q + 2 * q - 3; }

namespace {

void apply_partial(EdgeColoring& coloring, const PartialColoring& part) {
  for (const auto& [e, c] : part.edges) coloring.set(e.u, e.v, c);
}

void require_finished(const EdgeColoring& coloring) {
  if (!coloring.total()) {
    throw InternalConstructionFailure("construction left edges uncolored");
  }
  std::vector<char> used(static_cast<size_t>(coloring.k) + 1, 0);
  for (Color c : coloring.color_of) used[static_cast<size_t>(c)] = 1;
  for (int c = 1; c <= coloring.k; ++c) {
    if (!used[static_cast<size_t>(c)]) {
      throw InternalConstructionFailure("construction never used color " +
                                        std::to_string(c));
    }
  }
}

// Runs fn(i) for i in [0, count), possibly across threads; the writes of the
// individual iterations are disjoint, so the merged result matches the
// sequential one. The first exception is rethrown on the calling thread.
template <typename Fn>
void parallel_lines(int count, Fn&& fn) {
  std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

Construction theorem3_coloring(int q) {
  FieldContext field = make_field(q);
  Construction out;
  out.plane = build_plane(field);
  out.rep = realize(out.plane);
  const int n = out.plane.n;
  const int per_line = (q + 1) / 2;  // ceil(q/2)

  out.coloring = EdgeColoring(n, per_line * n);
  out.coloring.q = q;
  out.coloring.provenance = "theorem3";

  out.partition.classes.resize(static_cast<size_t>(n));
  for (int l = 0; l < n; ++l) {
    auto& palette = out.partition.classes[static_cast<size_t>(l)];
    palette.resize(static_cast<size_t>(per_line));
    std::iota(palette.begin(), palette.end(), l * per_line + 1);
  }

  // Every line is colored independently inside its own palette block: q even
  // cuts the K_{q+1} into Hamiltonian cycles, q odd into Hamiltonian paths.
  parallel_lines(n, [&](int l) {
    const auto& verts = out.rep.line_vertices[static_cast<size_t>(l)];
    const auto& palette = out.partition.classes[static_cast<size_t>(l)];
    PartialColoring part =
        q % 2 == 0 ? type_H(verts, palette) : type_P(verts, palette);
    apply_partial(out.coloring, part);
  });

  require_finished(out.coloring);
  return out;
}

Construction theorem5_coloring(int q) {
  if (q < 2 || (q & (q - 1)) != 0) {
    throw UnsupportedOrder("q must be a power of 2, got " + std::to_string(q));
  }
  FieldContext field = make_field(q);
  Construction out;
  out.plane = build_plane(field);
  out.rep = realize(out.plane);
  const LineRepresentation& rep = out.rep;
  const int n = out.plane.n;
  const int k = theorem5_color_count(q);

  out.coloring = EdgeColoring(n, k);
  out.coloring.q = q;
  out.coloring.provenance = "theorem5";
  EdgeColoring& col = out.coloring;

  // Palette partition: q^2-q+3 blocks of q-1 colors, then 2q-2 blocks of q.
  std::vector<std::vector<Color>> blocks(static_cast<size_t>(n) + 1);
  {
    int next = 1;
    for (int i = 1; i <= n; ++i) {
      int size = i <= q * q - q + 3 ? q - 1 : q;
      auto& block = blocks[static_cast<size_t>(i)];
      block.resize(static_cast<size_t>(size));
      std::iota(block.begin(), block.end(), next);
      next += size;
    }
    if (next - 1 != k) {
      throw InternalConstructionFailure("palette partition does not add up to k");
    }
  }

  // Line labeling. The designated line is plane line 0; its vertices in
  // ascending order are v_1..v_{q+1}. Pencil i holds the q other lines
  // through v_i in ascending plane order; the working index of the j-th line
  // of pencil i is q(i-1)+j, and the designated line is index n.
  const std::vector<Vertex>& vs = rep.line_vertices[0];
  std::vector<int> line_at(static_cast<size_t>(n) + 1, -1);
  line_at[static_cast<size_t>(n)] = 0;
  for (int i = 1; i <= q + 1; ++i) {
    Vertex vi = vs[static_cast<size_t>(i - 1)];
    int j = 0;
    for (int l = 1; l < n; ++l) {
      const auto& lverts = rep.line_vertices[static_cast<size_t>(l)];
      if (std::binary_search(lverts.begin(), lverts.end(), vi)) {
        line_at[static_cast<size_t>(q * (i - 1) + (++j))] = l;
      }
    }
    if (j != q) {
      throw InternalConstructionFailure("pencil through v_" + std::to_string(i) +
                                        " has " + std::to_string(j) + " lines");
    }
  }

  // Palette block of each working line index.
  std::vector<int> block_of(static_cast<size_t>(n) + 1, -1);
  for (int m = 1; m <= q * (q - 1); ++m) block_of[static_cast<size_t>(m)] = m;
  for (int t = 0; t <= 2; ++t) block_of[static_cast<size_t>(n - t)] = q * q - q + 3 - t;
  for (int j = 1; j <= q; ++j) {
    block_of[static_cast<size_t>(q * (q - 1) + j)] = q * q - q + 3 + j;
  }
  for (int j = 1; j <= q - 2; ++j) {
    block_of[static_cast<size_t>(q * q + j)] = q * q + 3 + j;
  }

  out.partition.classes.resize(static_cast<size_t>(n));
  for (int m = 1; m <= n; ++m) {
    out.partition.classes[static_cast<size_t>(line_at[static_cast<size_t>(m)])] =
        blocks[static_cast<size_t>(block_of[static_cast<size_t>(m)])];
  }

  // Special edges e_m = v_i u_m for the lines of pencils 1..q-1. The other
  // endpoint u_m is the meet with a designated line of pencil q (i <= q/2)
  // or of pencil q+1 (i > q/2); consecutive j-halves alternate between the
  // two designated lines so that each receives exactly q/2 spokes.
  std::vector<Edge> special(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= q - 1; ++i) {
    Vertex vi = vs[static_cast<size_t>(i - 1)];
    for (int j = 1; j <= q; ++j) {
      int m = q * (i - 1) + j;
      int target = i <= q / 2 ? q * (q - 1) + 2 * i - (j <= q / 2 ? 1 : 0)
                              : q * q + 2 * (i - q / 2) - (j <= q / 2 ? 1 : 0);
      Vertex u = rep.common_vertex(line_at[static_cast<size_t>(m)],
                                   line_at[static_cast<size_t>(target)]);
      if (u == vi) {
        throw InternalConstructionFailure("special edge collapsed at line " +
                                          std::to_string(m));
      }
      special[static_cast<size_t>(m)] = make_edge(vi, u);
      if (rep.line_through(vi, u) != line_at[static_cast<size_t>(m)]) {
        throw InternalConstructionFailure("special edge left its line");
      }
    }
  }

  // Step i: Type C on every line of pencils 1..q-1, leaving e_m uncolored.
  parallel_lines(q * (q - 1), [&](int idx) {
    int m = idx + 1;
    const auto& verts = rep.line_vertices[static_cast<size_t>(line_at[static_cast<size_t>(m)])];
    apply_partial(col, type_C(verts, special[static_cast<size_t>(m)],
                              blocks[static_cast<size_t>(m)]));
  });

  // Step ii: Type C on the designated line and the last two lines of pencil
  // q+1; any special edge works, so take the lexicographically least.
  for (int t = 0; t <= 2; ++t) {
    int m = n - t;
    const auto& verts = rep.line_vertices[static_cast<size_t>(line_at[static_cast<size_t>(m)])];
    Edge sp = make_edge(verts[0], verts[1]);
    special[static_cast<size_t>(m)] = sp;
    apply_partial(col, type_C(verts, sp, blocks[static_cast<size_t>(q * q - q + 3 - t)]));
  }

  // Step iii: Type 2 on the lines of pencil q and the first q-2 lines of
  // pencil q+1. The host graph of G_j is the line plus the star of special
  // edges aimed at it; the spoke targets are matched to the leftover
  // vertices in ascending order and the line's meet with the designated line
  // stays unmatched.
  auto color_type2_host = [&](int host_index, Vertex hub, int first_spoke,
                              int block_index) {
    const auto& verts =
        rep.line_vertices[static_cast<size_t>(line_at[static_cast<size_t>(host_index)])];
    Vertex unmatched = rep.common_vertex(line_at[static_cast<size_t>(host_index)], 0);

    std::vector<Vertex> targets;
    for (int s = 0; s < q / 2; ++s) {
      Edge e = special[static_cast<size_t>(first_spoke + s)];
      if (e.u != hub && e.v != hub) {
        throw InternalConstructionFailure("spoke does not start at its hub");
      }
      Vertex target = e.u == hub ? e.v : e.u;
      if (target == unmatched ||
          !std::binary_search(verts.begin(), verts.end(), target)) {
        throw InternalConstructionFailure("spoke target off its host line");
      }
      targets.push_back(target);
    }
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
      throw InternalConstructionFailure("duplicate spoke target");
    }

    std::vector<Vertex> rest;
    for (Vertex v : verts) {
      if (v != unmatched &&
          !std::binary_search(targets.begin(), targets.end(), v)) {
        rest.push_back(v);
      }
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (size_t t = 0; t < targets.size(); ++t) pairs.emplace_back(targets[t], rest[t]);

    apply_partial(col, type_2(verts, pairs, hub, blocks[static_cast<size_t>(block_index)]));
  };

  parallel_lines(q, [&](int idx) {
    int j = idx + 1;
    color_type2_host(q * (q - 1) + j, vs[static_cast<size_t>((j + 1) / 2 - 1)],
                     (j - 1) * (q / 2) + 1, q * q - q + 3 + j);
  });
  parallel_lines(q - 2, [&](int idx) {
    int j = idx + 1;
    color_type2_host(q * q + j, vs[static_cast<size_t>(q / 2 + (j + 1) / 2 - 1)],
                     q * q / 2 + (j - 1) * (q / 2) + 1, q * q + 3 + j);
  });

  // Step iv: the three remaining special edges get color 1.
  for (int t = 0; t <= 2; ++t) {
    Edge e = special[static_cast<size_t>(n - t)];
    col.set(e.u, e.v, 1);
  }

  require_finished(col);
  return out;
}

int largest_fitting_prime_power(int n) {
  if (n < 7) {
    throw TooSmall("no plane fits inside K_" + std::to_string(n));
  }
  int best = 0;
  for (int q : supported_prime_powers()) {
    if (q * q + q + 1 <= n) best = q;
  }
  return best;
}

EdgeColoring connected_coloring_best(int n) {
  int q = largest_fitting_prime_power(n);
  Construction core = theorem3_coloring(q);
  const int core_n = core.coloring.n;

  EdgeColoring out(n, core.coloring.k);
  out.q = q;
  out.provenance = "best-connected";
  for (int u = 0; u < core_n; ++u) {
    for (int v = u + 1; v < core_n; ++v) out.set(u, v, core.coloring.at(u, v));
  }
  // The leftover vertices form one component of K_n minus the core; absorbing
  // every edge they touch into class 1 keeps that class connected through the
  // core and changes nothing else.
  for (int u = 0; u < n; ++u) {
    for (int v = std::max(u + 1, core_n); v < n; ++v) out.set(u, v, 1);
  }
  require_finished(out);
  return out;
}

}  // namespace psi
