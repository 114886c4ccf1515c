#pragma once

#include <utility>
#include <vector>

#include "psi/coloring_types.hpp"
#include "psi/factorizations.hpp"

namespace psi {

// A coloring of some edges of the complete graph on `host`, with global color
// ids drawn from `palette`. Every palette color is used by at least one edge.
struct PartialColoring {
  std::vector<Vertex> host;
  std::vector<std::pair<Edge, Color>> edges;
  std::vector<Color> palette;
};

// Every class a Hamiltonian cycle of the host; |host| odd, |palette| =
// (|host|-1)/2. The classes partition the host edge set and every vertex owns
// the whole palette.
PartialColoring type_H(const std::vector<Vertex>& host,
                       const std::vector<Color>& palette);

// Every class a Hamiltonian path; |host| even, |palette| = |host|/2. Obtained
// by restricting a Type H coloring of the host plus one auxiliary vertex.
PartialColoring type_P(const std::vector<Vertex>& host,
                       const std::vector<Color>& palette);

// Every class a perfect matching; |host| even, |palette| = |host|-1.
PartialColoring type_M(const std::vector<Vertex>& host,
                       const std::vector<Color>& palette);

// Colors every host edge except `special`; |host| odd, |palette| = |host|-2.
// Built by deleting one special-edge endpoint, Type-M-coloring the rest and
// transplanting the other endpoint's colors onto the deleted vertex; every
// host vertex ends up owning the whole palette.
PartialColoring type_C(const std::vector<Vertex>& host, Edge special,
                       const std::vector<Color>& palette);

struct Type1Coloring {
  PartialColoring coloring;
  // Per matched vertex, the single palette color it does not own.
  std::vector<std::pair<Vertex, Color>> missing;

  Color missing_color_of(Vertex v) const;
};

// Colors E(host) minus the matching with |host|-1 colors; the unmatched
// vertex owns the whole palette, each matched vertex owns all but one color.
// |host| odd; `matching` must be maximum (covers all but one vertex).
Type1Coloring type_1(const std::vector<Vertex>& host, const Matching& matching,
                     const std::vector<Color>& palette);

// Type 1 plus the matching edges and a spoke star from `special_vertex` to
// the first endpoint of each pair, colored with the endpoints' missing
// colors. Afterwards every host vertex owns the whole palette.
PartialColoring type_2(const std::vector<Vertex>& host,
                       const std::vector<std::pair<Vertex, Vertex>>& pairs,
                       Vertex special_vertex,
                       const std::vector<Color>& palette);

// Convenience overload: the smaller endpoint of each matching edge receives
// the spoke.
PartialColoring type_2(const std::vector<Vertex>& host, const Matching& matching,
                       Vertex special_vertex,
                       const std::vector<Color>& palette);

}  // namespace psi
