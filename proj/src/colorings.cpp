#include "psi/colorings.hpp"

#include <algorithm>
#include <map>

namespace psi {

namespace {

void require_palette_size(const std::vector<Color>& palette, size_t expected,
                          const char* type_name) {
  if (palette.size() != expected) {
    throw PaletteSizeMismatch(std::string(type_name) + " needs " +
                              std::to_string(expected) + " colors, got " +
                              std::to_string(palette.size()));
  }
}

int find_local(const std::vector<Vertex>& host, Vertex v) {
  for (size_t i = 0; i < host.size(); ++i) {
    if (host[i] == v) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

PartialColoring type_H(const std::vector<Vertex>& host,
                       const std::vector<Color>& palette) {
  const int sz = static_cast<int>(host.size());
  if (sz < 3 || sz % 2 == 0) {
    throw ParityMismatch("Type H needs an odd host, got " + std::to_string(sz) +
                         " vertices");
  }
  require_palette_size(palette, static_cast<size_t>((sz - 1) / 2), "Type H");

  PartialColoring out{host, {}, palette};
  HamiltonianDecomposition dec = hamiltonian_decompose(sz);
  for (size_t i = 0; i < dec.cycles.size(); ++i) {
    const auto& cyc = dec.cycles[i];
    for (size_t j = 0; j < cyc.size(); ++j) {
      Vertex a = host[static_cast<size_t>(cyc[j])];
      Vertex b = host[static_cast<size_t>(cyc[(j + 1) % cyc.size()])];
      out.edges.emplace_back(make_edge(a, b), palette[i]);
    }
  }
  return out;
}

PartialColoring type_P(const std::vector<Vertex>& host,
                       const std::vector<Color>& palette) {
  const int sz = static_cast<int>(host.size());
  if (sz < 2 || sz % 2 != 0) {
    throw ParityMismatch("Type P needs an even host, got " + std::to_string(sz) +
                         " vertices");
  }
  require_palette_size(palette, static_cast<size_t>(sz / 2), "Type P");

  // Type H on the host plus an auxiliary vertex, restricted back to the host:
  // each cycle loses its two auxiliary edges and becomes a Hamiltonian path.
  PartialColoring out{host, {}, palette};
  const int aux = sz;  // local id of the added vertex
  HamiltonianDecomposition dec = hamiltonian_decompose(sz + 1);
  for (size_t i = 0; i < dec.cycles.size(); ++i) {
    const auto& cyc = dec.cycles[i];
    for (size_t j = 0; j < cyc.size(); ++j) {
      int a = cyc[j];
      int b = cyc[(j + 1) % cyc.size()];
      if (a == aux || b == aux) continue;
      out.edges.emplace_back(
          make_edge(host[static_cast<size_t>(a)], host[static_cast<size_t>(b)]),
          palette[i]);
    }
  }
  return out;
}

PartialColoring type_M(const std::vector<Vertex>& host,
                       const std::vector<Color>& palette) {
  const int sz = static_cast<int>(host.size());
  if (sz < 2 || sz % 2 != 0) {
    throw ParityMismatch("Type M needs an even host, got " + std::to_string(sz) +
                         " vertices");
  }
  require_palette_size(palette, static_cast<size_t>(sz - 1), "Type M");

  PartialColoring out{host, {}, palette};
  OneFactorization fac = one_factorize(sz);
  for (size_t i = 0; i < fac.factors.size(); ++i) {
    for (const Edge& e : fac.factors[i]) {
      out.edges.emplace_back(make_edge(host[static_cast<size_t>(e.u)],
                                       host[static_cast<size_t>(e.v)]),
                             palette[i]);
    }
  }
  return out;
}

PartialColoring type_C(const std::vector<Vertex>& host, Edge special,
                       const std::vector<Color>& palette) {
  const int sz = static_cast<int>(host.size());
  if (sz < 3 || sz % 2 == 0) {
    throw ParityMismatch("Type C needs an odd host, got " + std::to_string(sz) +
                         " vertices");
  }
  require_palette_size(palette, static_cast<size_t>(sz - 2), "Type C");
  if (special.u == special.v || find_local(host, special.u) < 0 ||
      find_local(host, special.v) < 0) {
    throw SpecialEdgeOutsideHost("special edge endpoints must be two distinct host vertices");
  }

  // Delete endpoint `del`, Type-M-color the remaining even clique, then copy
  // the donor endpoint's edge colors onto `del`. The special edge itself
  // stays uncolored.
  const Vertex del = special.u;
  const Vertex donor = special.v;
  std::vector<Vertex> rest;
  rest.reserve(static_cast<size_t>(sz) - 1);
  for (Vertex v : host) {
    if (v != del) rest.push_back(v);
  }

  PartialColoring inner = type_M(rest, palette);
  PartialColoring out{host, inner.edges, palette};
  for (const auto& [e, c] : inner.edges) {
    if (e.u == donor || e.v == donor) {
      Vertex w = e.u == donor ? e.v : e.u;
      out.edges.emplace_back(make_edge(del, w), c);
    }
  }
  return out;
}

Color Type1Coloring::missing_color_of(Vertex v) const {
  for (const auto& [vert, color] : missing) {
    if (vert == v) return color;
  }
  throw Error("vertex " + std::to_string(v) + " has no missing color on record");
}

Type1Coloring type_1(const std::vector<Vertex>& host, const Matching& matching,
                     const std::vector<Color>& palette) {
  const int sz = static_cast<int>(host.size());
  if (sz < 3 || sz % 2 == 0) {
    throw ParityMismatch("Type 1 needs an odd host, got " + std::to_string(sz) +
                         " vertices");
  }
  const int q = sz - 1;
  require_palette_size(palette, static_cast<size_t>(q), "Type 1");

  // The matching must cover all host vertices but one.
  if (static_cast<int>(matching.size()) != q / 2) {
    throw NotMaximumMatching("expected " + std::to_string(q / 2) + " matching edges");
  }
  std::vector<char> matched(static_cast<size_t>(sz), 0);
  for (const Edge& e : matching) {
    int lu = find_local(host, e.u);
    int lv = find_local(host, e.v);
    if (lu < 0 || lv < 0 || lu == lv) {
      throw NotMaximumMatching("matching edge leaves the host");
    }
    if (matched[static_cast<size_t>(lu)] || matched[static_cast<size_t>(lv)]) {
      throw NotMaximumMatching("matching covers a vertex twice");
    }
    matched[static_cast<size_t>(lu)] = matched[static_cast<size_t>(lv)] = 1;
  }
  int unmatched_local = -1;
  for (int i = 0; i < sz; ++i) {
    if (!matched[static_cast<size_t>(i)]) unmatched_local = i;
  }

  // 1-factorize the host plus an auxiliary vertex so that the matching plus
  // the auxiliary-to-unmatched edge is one factor; drop that factor and every
  // auxiliary edge. Each surviving factor restricts to q/2 host edges, and
  // the color of the dropped auxiliary edge at a matched vertex is exactly
  // the color that vertex fails to own.
  const int aux = sz;
  Matching special_factor;
  for (const Edge& e : matching) {
    special_factor.push_back(make_edge(find_local(host, e.u), find_local(host, e.v)));
  }
  special_factor.push_back(make_edge(unmatched_local, aux));
  std::sort(special_factor.begin(), special_factor.end());

  OneFactorization fac = one_factorize_containing(sz + 1, special_factor);

  Type1Coloring out;
  out.coloring.host = host;
  out.coloring.palette = palette;
  size_t next_color = 0;
  for (const Matching& factor : fac.factors) {
    if (factor == special_factor) continue;
    Color c = palette[next_color++];
    for (const Edge& e : factor) {
      if (e.v == aux) {
        out.missing.emplace_back(host[static_cast<size_t>(e.u)], c);
      } else {
        out.coloring.edges.emplace_back(
            make_edge(host[static_cast<size_t>(e.u)], host[static_cast<size_t>(e.v)]),
            c);
      }
    }
  }
  if (next_color != palette.size()) {
    throw InternalConstructionFailure("Type 1 did not consume its palette");
  }
  std::sort(out.missing.begin(), out.missing.end());
  return out;
}

PartialColoring type_2(const std::vector<Vertex>& host,
                       const std::vector<std::pair<Vertex, Vertex>>& pairs,
                       Vertex special_vertex,
                       const std::vector<Color>& palette) {
  if (find_local(host, special_vertex) >= 0) {
    throw SpecialVertexInsideHost("special vertex " + std::to_string(special_vertex) +
                                  " belongs to the host");
  }
  Matching matching;
  matching.reserve(pairs.size());
  for (const auto& [a, b] : pairs) matching.push_back(make_edge(a, b));

  Type1Coloring base = type_1(host, matching, palette);

  PartialColoring out = base.coloring;
  out.host.push_back(special_vertex);
  for (const auto& [spoke_target, partner] : pairs) {
    out.edges.emplace_back(make_edge(special_vertex, spoke_target),
                           base.missing_color_of(spoke_target));
    out.edges.emplace_back(make_edge(spoke_target, partner),
                           base.missing_color_of(partner));
  }
  return out;
}

PartialColoring type_2(const std::vector<Vertex>& host, const Matching& matching,
                       Vertex special_vertex,
                       const std::vector<Color>& palette) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(matching.size());
  for (const Edge& e : matching) pairs.emplace_back(e.u, e.v);
  return type_2(host, pairs, special_vertex, palette);
}

}  // namespace psi
