#pragma once

#include <vector>

#include "psi/coloring_types.hpp"

namespace psi {

enum class SearchMode { pseudoachromatic, connected };

const char* to_string(SearchMode mode);

struct SearchConfig {
  int n = 0;
  SearchMode mode = SearchMode::pseudoachromatic;
  double time_budget_seconds = 60.0;
  bool symmetry_breaking = true;  // introduce color c+1 only after color c
  int threads = 1;                // >1 explores frontier subtrees in parallel
};

struct SearchResult {
  int n = 0;
  SearchMode mode = SearchMode::pseudoachromatic;
  bool exact = false;
  int value_lower = 0;  // largest k with a verified witness
  int value_upper = 0;  // smallest refuted k, minus one
  EdgeColoring witness; // complete (and connected, in that mode) coloring
                        // with value_lower colors
  long long nodes = 0;
  double seconds = 0.0;

  int value() const { return value_lower; }  // the index when exact
};

// Exact branch-and-bound over surjective edge colorings of K_n, descending
// from an arithmetic upper estimate. Feasibility is monotone in k, so the
// first feasible k (with everything above refuted) is the index. On budget
// exhaustion the result is an honest bracket. Throws TooSmall for n < 2 and
// UnsupportedOrder above the feasibility ceiling.
SearchResult exact_index(const SearchConfig& config);

int search_feasibility_ceiling();  // 7

// Known exact reference values for small complete graphs.
int reference_connected_index(int n);  // n in [2,7]
int reference_pseudo_index(int n);     // n in [2,13]

struct TableRow {
  int n = 0;
  int connected_ref = 0;
  int pseudo_ref = 0;
  SearchResult connected;
  SearchResult pseudo;
  bool match = false;  // both exact and equal to the reference values
};

struct TableComparison {
  std::vector<TableRow> rows;
  bool all_match = false;
};

// Recomputes both indices for n = 2..max_n and compares against the reference
// tables. max_n <= 7.
TableComparison verify_table_prefix(int max_n, double budget_per_run = 60.0);

}  // namespace psi
