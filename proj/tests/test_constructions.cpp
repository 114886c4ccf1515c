#include <doctest.h>

#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "psi/bounds.hpp"
#include "psi/constructions.hpp"
#include "psi/verifier.hpp"

using psi::Construction;
using psi::EdgeColoring;

namespace {

std::map<long long, int> size_histogram(const EdgeColoring& col) {
  std::map<long long, int> hist;
  auto sizes = psi::class_sizes(col);
  for (size_t c = 1; c < sizes.size(); ++c) ++hist[sizes[c]];
  return hist;
}

}  // namespace

TEST_CASE("theorem3 q=2: K_7 with 7 triangle classes") {
  Construction c = psi::theorem3_coloring(2);
  CHECK(c.coloring.n == 7);
  CHECK(c.coloring.k == 7);
  CHECK(c.coloring.k == psi::theorem3_color_count(2));
  CHECK(psi::check_complete(c.coloring).complete);
  CHECK(psi::check_connected(c.coloring).connected);
  CHECK(size_histogram(c.coloring) == std::map<long long, int>{{3, 7}});
  CHECK(c.partition.is_partition_of(7));
}

TEST_CASE("theorem3 q=3: K_13 with 26 Hamiltonian path classes") {
  Construction c = psi::theorem3_coloring(3);
  CHECK(c.coloring.n == 13);
  CHECK(c.coloring.k == 26);
  CHECK(psi::check_complete(c.coloring).complete);
  CHECK(psi::check_connected(c.coloring).connected);
  // q odd: classes are Hamiltonian paths with q edges
  CHECK(size_histogram(c.coloring) == std::map<long long, int>{{3, 26}});
}

TEST_CASE("theorem3 q=4: 42 colors, complete by exhaustive pair scan") {
  Construction c = psi::theorem3_coloring(4);
  CHECK(c.coloring.k == 42);
  CHECK(psi::check_complete_serial(c.coloring).complete);  // the pairwise route
  CHECK(psi::check_connected(c.coloring).connected);
  // q even: classes are Hamiltonian cycles with q+1 edges
  CHECK(size_histogram(c.coloring) == std::map<long long, int>{{5, 42}});
}

TEST_CASE("theorem3 q=5: 93 colors") {
  Construction c = psi::theorem3_coloring(5);
  CHECK(c.coloring.k == 93);
  CHECK(psi::check_complete(c.coloring).complete);
  CHECK(psi::check_connected(c.coloring).connected);
}

TEST_CASE("theorem3 lemma 2 premise holds per line") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    Construction c = psi::theorem3_coloring(q);
    CHECK(psi::check_lemma2_premise(c.coloring, c.rep, c.partition).holds);
  }
}

TEST_CASE("theorem3 rejects unsupported orders") {
  CHECK_THROWS_AS(psi::theorem3_coloring(6), psi::NotAPrimePower);
  CHECK_THROWS_AS(psi::theorem3_coloring(64), psi::UnsupportedOrder);
}

TEST_CASE("theorem5 q=2: 9 colors with the prescribed palette sizes") {
  Construction c = psi::theorem5_coloring(2);
  CHECK(c.coloring.n == 7);
  CHECK(c.coloring.k == 9);
  CHECK(c.coloring.k == psi::theorem5_color_count(2));
  CHECK(psi::check_complete(c.coloring).complete);
  CHECK(c.partition.is_partition_of(9));

  std::map<size_t, int> block_sizes;
  for (const auto& block : c.partition.classes) ++block_sizes[block.size()];
  CHECK(block_sizes == std::map<size_t, int>{{1, 5}, {2, 2}});

  // class sizes: q/2+1 everywhere except color 1 at q/2+4
  CHECK(size_histogram(c.coloring) == std::map<long long, int>{{2, 8}, {5, 1}});
}

TEST_CASE("theorem5 q=4: 69 colors, complete, correct class profile") {
  Construction c = psi::theorem5_coloring(4);
  CHECK(c.coloring.n == 21);
  CHECK(c.coloring.k == 69);
  CHECK(psi::check_complete(c.coloring).complete);
  CHECK(psi::check_lemma2_premise(c.coloring, c.rep, c.partition).holds);
  CHECK(size_histogram(c.coloring) == std::map<long long, int>{{3, 68}, {6, 1}});
  // (q/2+1) * k = C(n,2) - 3
  CHECK(3LL * 69 == psi::edge_count(21) - 3);
}

TEST_CASE("theorem5 q=8: 525 colors") {
  Construction c = psi::theorem5_coloring(8);
  CHECK(c.coloring.k == 525);
  CHECK(psi::check_complete(c.coloring).complete);
  CHECK(psi::check_lemma2_premise(c.coloring, c.rep, c.partition).holds);
  CHECK(size_histogram(c.coloring) == std::map<long long, int>{{5, 524}, {8, 1}});
  CHECK(5LL * 525 == psi::edge_count(73) - 3);
}

TEST_CASE("theorem5 rejects non powers of two") {
  CHECK_THROWS_AS(psi::theorem5_coloring(3), psi::UnsupportedOrder);
  CHECK_THROWS_AS(psi::theorem5_coloring(6), psi::UnsupportedOrder);
  CHECK_THROWS_AS(psi::theorem5_coloring(0), psi::UnsupportedOrder);
}

TEST_CASE("connected_coloring_best") {
  SUBCASE("n=7 is the exact fit") {
    EdgeColoring col = psi::connected_coloring_best(7);
    CHECK(col.k == 7);
    CHECK(psi::check_complete(col).complete);
    CHECK(psi::check_connected(col).connected);
  }
  SUBCASE("n=12 still rides on q=2") {
    EdgeColoring col = psi::connected_coloring_best(12);
    CHECK(col.q == 2);
    CHECK(col.k == 7);
    CHECK(psi::check_complete(col).complete);
    CHECK(psi::check_connected(col).connected);
  }
  SUBCASE("n=13 jumps to q=3") {
    EdgeColoring col = psi::connected_coloring_best(13);
    CHECK(col.q == 3);
    CHECK(col.k == 26);
    CHECK(psi::check_complete(col).complete);
    CHECK(psi::check_connected(col).connected);
  }
  SUBCASE("too small") {
    CHECK_THROWS_AS(psi::connected_coloring_best(6), psi::TooSmall);
  }
  SUBCASE("color count is monotone in n") {
    int prev = 0;
    for (int n = 7; n <= 60; ++n) {
      int k = psi::connected_coloring_best(n).k;
      CHECK(k >= prev);
      prev = k;
    }
  }
}

TEST_CASE("constructed connected counts respect the analytic upper bound") {
  for (int q : {2, 3, 4, 5}) {
    Construction c = psi::theorem3_coloring(q);
    long long bound = psi::theorem1_bound(c.coloring.n).bound;
    CHECK(c.coloring.k <= bound);
  }
}

TEST_CASE("construction output does not depend on the thread count") {
  psi::EdgeColoring a, b;
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  a = psi::theorem5_coloring(4).coloring;
  omp_set_num_threads(saved > 1 ? saved : 2);
  b = psi::theorem5_coloring(4).coloring;
  omp_set_num_threads(saved);
#else
  a = psi::theorem5_coloring(4).coloring;
  b = psi::theorem5_coloring(4).coloring;
#endif
  CHECK(a.color_of == b.color_of);

  // repeated runs are bit-identical
  psi::EdgeColoring c = psi::theorem3_coloring(3).coloring;
  psi::EdgeColoring d = psi::theorem3_coloring(3).coloring;
  CHECK(c.color_of == d.color_of);
}
