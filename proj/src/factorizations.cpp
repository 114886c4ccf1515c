#include "psi/factorizations.hpp"

#include <algorithm>

namespace psi {

OneFactorization one_factorize(int m) {
  if (m < 2 || m % 2 != 0) {
    throw OddOrder("1-factorization needs an even order, got " + std::to_string(m));
  }
  OneFactorization out;
  out.m = m;
  const int fixed = m - 1;
  const int mod = m - 1;
  for (int r = 0; r < m - 1; ++r) {
    Matching factor;
    factor.reserve(static_cast<size_t>(m) / 2);
    factor.push_back(make_edge(fixed, r));
    for (int i = 1; i <= m / 2 - 1; ++i) {
      factor.push_back(make_edge((r + i) % mod, (r - i + mod) % mod));
    }
    std::sort(factor.begin(), factor.end());
    out.factors.push_back(std::move(factor));
  }
  return out;
}

HamiltonianDecomposition hamiltonian_decompose(int m) {
  if (m < 3 || m % 2 == 0) {
    throw EvenOrder("Hamiltonian decomposition needs an odd order >= 3, got " +
                    std::to_string(m));
  }
  HamiltonianDecomposition out;
  out.m = m;
  const int apex = m - 1;
  const int ring = m - 1;  // vertices 0..m-2 on the ring
  const int t = (m - 1) / 2;
  for (int r = 0; r < t; ++r) {
    std::vector<Vertex> cycle;
    cycle.reserve(static_cast<size_t>(m));
    cycle.push_back(apex);
    cycle.push_back(r % ring);
    // zigzag offsets +1, -1, +2, -2, ..., +t
    for (int i = 1; i < t; ++i) {
      cycle.push_back((r + i) % ring);
      cycle.push_back((r - i + ring) % ring);
    }
    cycle.push_back((r + t) % ring);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

namespace {

void require_perfect_matching(int m, const Matching& matching) {
  if (static_cast<int>(matching.size()) != m / 2) {
    throw NotPerfectMatching("expected " + std::to_string(m / 2) + " edges, got " +
                             std::to_string(matching.size()));
  }
  std::vector<char> covered(static_cast<size_t>(m), 0);
  for (const Edge& e : matching) {
    if (e.u < 0 || e.v >= m || e.u >= e.v) {
      throw NotPerfectMatching("edge out of range or not canonical");
    }
    if (covered[static_cast<size_t>(e.u)] || covered[static_cast<size_t>(e.v)]) {
      throw NotPerfectMatching("vertex covered twice");
    }
    covered[static_cast<size_t>(e.u)] = covered[static_cast<size_t>(e.v)] = 1;
  }
}

}  // namespace

OneFactorization one_factorize_containing(int m, const Matching& matching) {
  if (m < 2 || m % 2 != 0) {
    throw OddOrder("1-factorization needs an even order, got " + std::to_string(m));
  }
  require_perfect_matching(m, matching);

  OneFactorization base = one_factorize(m);

  // Relabel vertices so the first circle factor lands exactly on `matching`.
  Matching target = matching;
  std::sort(target.begin(), target.end());
  Matching source = base.factors[0];  // already sorted

  std::vector<int> relabel(static_cast<size_t>(m), -1);
  for (size_t i = 0; i < source.size(); ++i) {
    relabel[static_cast<size_t>(source[i].u)] = target[i].u;
    relabel[static_cast<size_t>(source[i].v)] = target[i].v;
  }

  OneFactorization out;
  out.m = m;
  out.factors.reserve(base.factors.size());
  for (const Matching& factor : base.factors) {
    Matching mapped;
    mapped.reserve(factor.size());
    for (const Edge& e : factor) {
      mapped.push_back(make_edge(relabel[static_cast<size_t>(e.u)],
                                 relabel[static_cast<size_t>(e.v)]));
    }
    std::sort(mapped.begin(), mapped.end());
    out.factors.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace psi
