#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "psi/factorizations.hpp"

using psi::Edge;
using psi::hamiltonian_decompose;
using psi::Matching;
using psi::one_factorize;
using psi::one_factorize_containing;

namespace {

// Independent validity oracle: edge-disjoint perfect matchings covering E(K_m).
void check_one_factorization(const psi::OneFactorization& f) {
  REQUIRE(f.factors.size() == static_cast<size_t>(f.m - 1));
  std::set<Edge> seen;
  for (const auto& factor : f.factors) {
    REQUIRE(factor.size() == static_cast<size_t>(f.m) / 2);
    std::set<int> covered;
    for (const Edge& e : factor) {
      CHECK(e.u < e.v);
      CHECK(e.u >= 0);
      CHECK(e.v < f.m);
      CHECK(covered.insert(e.u).second);
      CHECK(covered.insert(e.v).second);
      CHECK(seen.insert(e).second);
    }
  }
  CHECK(seen.size() == static_cast<size_t>(psi::edge_count(f.m)));
}

// Edge-disjoint spanning cycles covering E(K_m).
void check_hamiltonian_decomposition(const psi::HamiltonianDecomposition& h) {
  REQUIRE(h.cycles.size() == static_cast<size_t>((h.m - 1) / 2));
  std::set<Edge> seen;
  for (const auto& cycle : h.cycles) {
    REQUIRE(cycle.size() == static_cast<size_t>(h.m));
    std::set<int> visited(cycle.begin(), cycle.end());
    CHECK(visited.size() == static_cast<size_t>(h.m));
    for (size_t i = 0; i < cycle.size(); ++i) {
      Edge e = psi::make_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
      CHECK(seen.insert(e).second);
    }
  }
  CHECK(seen.size() == static_cast<size_t>(psi::edge_count(h.m)));
}

}  // namespace

TEST_CASE("one_factorize small cases") {
  psi::OneFactorization f2 = one_factorize(2);
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0] == Matching{Edge{0, 1}});

  psi::OneFactorization f4 = one_factorize(4);
  std::set<std::set<Edge>> factors;
  for (const auto& factor : f4.factors) {
    factors.insert(std::set<Edge>(factor.begin(), factor.end()));
  }
  std::set<std::set<Edge>> expected = {
      {Edge{0, 1}, Edge{2, 3}}, {Edge{0, 2}, Edge{1, 3}}, {Edge{0, 3}, Edge{1, 2}}};
  CHECK(factors == expected);

  check_one_factorization(one_factorize(8));
  CHECK_THROWS_AS(one_factorize(5), psi::OddOrder);
  CHECK_THROWS_AS(one_factorize(0), psi::OddOrder);
}

TEST_CASE("one_factorize sweep") {
  for (int m = 2; m <= 18; m += 2) {
    CAPTURE(m);
    check_one_factorization(one_factorize(m));
  }
}

TEST_CASE("hamiltonian_decompose small cases") {
  psi::HamiltonianDecomposition h3 = hamiltonian_decompose(3);
  REQUIRE(h3.cycles.size() == 1);
  CHECK(std::set<int>(h3.cycles[0].begin(), h3.cycles[0].end()) ==
        std::set<int>{0, 1, 2});

  check_hamiltonian_decomposition(hamiltonian_decompose(5));
  check_hamiltonian_decomposition(hamiltonian_decompose(9));
  CHECK_THROWS_AS(hamiltonian_decompose(4), psi::EvenOrder);
  CHECK_THROWS_AS(hamiltonian_decompose(1), psi::EvenOrder);
}

TEST_CASE("hamiltonian_decompose sweep") {
  for (int m = 3; m <= 17; m += 2) {
    CAPTURE(m);
    check_hamiltonian_decomposition(hamiltonian_decompose(m));
  }
}

TEST_CASE("one_factorize_containing keeps the prescribed matching") {
  Matching m4 = {Edge{0, 3}, Edge{1, 2}};
  psi::OneFactorization f4 = one_factorize_containing(4, m4);
  check_one_factorization(f4);
  Matching sorted = m4;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::count(f4.factors.begin(), f4.factors.end(), sorted) == 1);

  Matching m6 = {Edge{0, 1}, Edge{2, 3}, Edge{4, 5}};
  psi::OneFactorization f6 = one_factorize_containing(6, m6);
  check_one_factorization(f6);
  CHECK(std::count(f6.factors.begin(), f6.factors.end(), m6) == 1);

  CHECK_THROWS_AS(one_factorize_containing(4, Matching{Edge{0, 1}, Edge{1, 2}}),
                  psi::NotPerfectMatching);
  CHECK_THROWS_AS(one_factorize_containing(4, Matching{Edge{0, 1}}),
                  psi::NotPerfectMatching);
}

TEST_CASE("one_factorize_containing on random matchings") {
  std::mt19937 rng(20240817);
  for (int m = 2; m <= 14; m += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(static_cast<size_t>(m));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Matching matching;
      for (int i = 0; i < m; i += 2) {
        matching.push_back(psi::make_edge(perm[static_cast<size_t>(i)],
                                          perm[static_cast<size_t>(i + 1)]));
      }
      std::sort(matching.begin(), matching.end());
      psi::OneFactorization f = one_factorize_containing(m, matching);
      check_one_factorization(f);
      CHECK(std::count(f.factors.begin(), f.factors.end(), matching) == 1);
    }
  }
}
