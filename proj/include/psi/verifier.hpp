#pragma once

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "psi/coloring_types.hpp"
#include "psi/representation.hpp"

namespace psi {

// Independent checks over a finished EdgeColoring. Nothing here trusts
// construction internals; everything is recomputed from the coloring map.
//
// The hot checks come in two versions: an OpenMP kernel (the default entry
// points) and a serial reference implementation on a different algorithmic
// route, kept for testing and benchmarked against the kernel. Both return
// identical verdicts and the lexicographically first witness.

struct PairWitness {
  Color a = 0, b = 0;  // violating color pair, a < b
};

struct CompletenessCheck {
  bool complete = true;
  PairWitness witness;
};

struct ConnectivityCheck {
  bool connected = true;
  Color witness_class = 0;  // smallest disconnected color class
};

struct Lemma2Check {
  bool holds = true;
  int line = -1;      // first line failing to own its palette
  Vertex vertex = -1; // vertex of that line missing a color
  Color color = 0;    // the color it misses
};

// True iff every pair of distinct colors meets at some vertex. Throws
// PartialColoringError if any edge is uncolored.
// Kernel: per-vertex owned-color bitsets OR-accumulated into a covered-pairs
// matrix, rows split across threads.
CompletenessCheck check_complete(const EdgeColoring& coloring);
// Reference: per-color vertex bitsets, pairwise intersection scan.
CompletenessCheck check_complete_serial(const EdgeColoring& coloring);

// True iff every color class induces a connected subgraph. Classes with no
// edges are vacuously connected (completeness flags unused colors anyway).
// Kernel: per-class union-find, classes split across threads.
ConnectivityCheck check_connected(const EdgeColoring& coloring);
// Reference: per-class breadth-first search.
ConnectivityCheck check_connected_serial(const EdgeColoring& coloring);

// Per-vertex owned-color sets, one k+1-bit row per vertex (bit c = owns c).
std::vector<boost::dynamic_bitset<>> owned_color_sets(const EdgeColoring&);

std::vector<Color> owners_of(const EdgeColoring& coloring, Vertex v);

// A subgraph owns a color set when every one of its vertices does.
bool is_owner(const EdgeColoring& coloring, const std::vector<Vertex>& subgraph,
              const std::vector<Color>& colors);

// Every line owns its palette. A pass implies completeness; verify() checks
// the implication directly and flags any discrepancy as an internal error.
Lemma2Check check_lemma2_premise(const EdgeColoring& coloring,
                                 const LineRepresentation& rep,
                                 const ColorPartition& partition);

// Edge count per color, index 1..k; [0] counts uncolored edges.
std::vector<long long> class_sizes(const EdgeColoring& coloring);

struct VerifyReport {
  CompletenessCheck completeness;
  ConnectivityCheck connectivity;
  bool connectivity_checked = false;
  std::vector<long long> sizes;
  Lemma2Check lemma2;
  bool lemma2_checked = false;
  bool internally_consistent = true;  // lemma2 pass must imply completeness
};

VerifyReport verify(const EdgeColoring& coloring,
                    const LineRepresentation* rep = nullptr,
                    const ColorPartition* partition = nullptr,
                    bool want_connected = true);

}  // namespace psi
