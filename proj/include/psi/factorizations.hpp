#pragma once

#include <vector>

#include "psi/coloring_types.hpp"

namespace psi {

using Matching = std::vector<Edge>;

// Partition of E(K_m), m even, into m-1 perfect matchings.
struct OneFactorization {
  int m = 0;
  std::vector<Matching> factors;
};

// Partition of E(K_m), m odd, into (m-1)/2 Hamiltonian cycles, each stored as
// a vertex sequence of length m (the closing edge is implicit).
struct HamiltonianDecomposition {
  int m = 0;
  std::vector<std::vector<Vertex>> cycles;
};

// Circle (round-robin) method; factors ordered by rotation index.
OneFactorization one_factorize(int m);  // throws OddOrder

// Walecki zigzag construction.
HamiltonianDecomposition hamiltonian_decompose(int m);  // throws EvenOrder

// Circle factorization relabeled so that `matching` appears verbatim as a
// factor. Throws NotPerfectMatching.
OneFactorization one_factorize_containing(int m, const Matching& matching);

}  // namespace psi
