#include "psi/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "psi/constructions.hpp"

namespace psi {

namespace {

constexpr int kCeiling = 7;
constexpr int kMaxEdges = 21;   // C(7,2)
constexpr int kMaxColors = 21;  // a surjective coloring has k <= |E|

using SteadyClock = std::chrono::steady_clock;

// Depth-first search over edge colorings of K_n with exactly k colors, edges
// assigned in lexicographic order. Symmetry breaking: color c+1 may only be
// introduced after color c. Prunes:
//   - colors still to introduce cannot exceed the remaining edges;
//   - unmet color pairs cannot exceed remaining * 2(n-2), the most new pairs
//     one assignment can meet;
//   - unmet pairs cannot exceed the total pair capacity still available at
//     the vertices (each vertex hosts at most C(n-1, 2) pairs);
//   - in connected mode, every extra component costs at least one edge.
struct Dfs {
  int n = 0, m = 0, k = 0;
  bool connected_mode = false;
  bool canonical = true;

  std::array<Edge, kMaxEdges> edges{};
  std::array<int8_t, kMaxEdges> assigned{};
  std::array<uint32_t, kMaxColors + 1> met{};   // met[c] bit b: pair {c,b} seen
  std::array<uint32_t, 8> colors_at{};          // per vertex, bit c
  std::array<int8_t, 8> degree{};
  std::array<uint32_t, kMaxColors + 1> class_vertices{};
  std::array<std::array<uint8_t, 8>, kMaxColors + 1> class_adj{};
  std::array<int8_t, kMaxColors + 1> components{};
  int total_deficit = 0;
  long long unmet = 0;
  int max_used = 0;
  long long vertex_slack = 0;
  long long nodes = 0;
  std::array<int8_t, kMaxEdges> found_assignment{};  // leaf snapshot

  SteadyClock::time_point deadline{};
  std::atomic<bool>* stop = nullptr;
  bool budget_hit = false;

  enum class Status { kFound, kExhausted, kAborted };

  void init(int n_, int k_, bool connected, bool symmetry,
            SteadyClock::time_point deadline_, std::atomic<bool>* stop_) {
    n = n_;
    k = k_;
    m = static_cast<int>(edge_count(n_));
    connected_mode = connected;
    canonical = symmetry;
    deadline = deadline_;
    stop = stop_;
    int pos = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edges[static_cast<size_t>(pos++)] = {u, v};
    }
    unmet = static_cast<long long>(k) * (k - 1) / 2;
    vertex_slack = static_cast<long long>(n) * (n - 1) * (n - 2) / 2;
  }

  bool reachable_in_class(int c, int from, int to) const {
    uint32_t seen = 1u << from;
    uint32_t frontier = seen;
    while (frontier != 0) {
      uint32_t next = 0;
      uint32_t f = frontier;
      while (f != 0) {
        int w = std::countr_zero(f);
        f &= f - 1;
        next |= class_adj[static_cast<size_t>(c)][static_cast<size_t>(w)];
      }
      next &= ~seen;
      if ((next & (1u << to)) != 0) return true;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  struct Undo {
    uint32_t newly_met = 0;
    uint32_t prev_colors_u = 0, prev_colors_v = 0;
    uint32_t prev_class_vertices = 0;
    int8_t prev_components = 0;
    int prev_max_used = 0;
    int prev_deficit = 0;
  };

  void assign(int pos, int c, Undo& undo) {
    const Edge e = edges[static_cast<size_t>(pos)];
    const uint32_t cbit = 1u << c;
    auto& mu = colors_at[static_cast<size_t>(e.u)];
    auto& mv = colors_at[static_cast<size_t>(e.v)];

    undo.prev_colors_u = mu;
    undo.prev_colors_v = mv;
    undo.prev_max_used = max_used;
    undo.prev_class_vertices = class_vertices[static_cast<size_t>(c)];
    undo.prev_components = components[static_cast<size_t>(c)];
    undo.prev_deficit = total_deficit;

    uint32_t newly = (mu | mv) & ~cbit & ~met[static_cast<size_t>(c)];
    undo.newly_met = newly;
    met[static_cast<size_t>(c)] |= newly;
    uint32_t bits = newly;
    while (bits != 0) {
      int b = std::countr_zero(bits);
      bits &= bits - 1;
      met[static_cast<size_t>(b)] |= cbit;
    }
    unmet -= std::popcount(newly);

    vertex_slack -= degree[static_cast<size_t>(e.u)] + degree[static_cast<size_t>(e.v)];
    ++degree[static_cast<size_t>(e.u)];
    ++degree[static_cast<size_t>(e.v)];
    mu |= cbit;
    mv |= cbit;
    max_used = std::max(max_used, c);

    const uint32_t had_u = undo.prev_class_vertices & (1u << e.u);
    const uint32_t had_v = undo.prev_class_vertices & (1u << e.v);
    int delta_components;
    if (had_u == 0 && had_v == 0) {
      delta_components = 1;
    } else if (had_u != 0 && had_v != 0) {
      delta_components = reachable_in_class(c, e.u, e.v) ? 0 : -1;
    } else {
      delta_components = 0;
    }
    class_adj[static_cast<size_t>(c)][static_cast<size_t>(e.u)] |=
        static_cast<uint8_t>(1u << e.v);
    class_adj[static_cast<size_t>(c)][static_cast<size_t>(e.v)] |=
        static_cast<uint8_t>(1u << e.u);
    class_vertices[static_cast<size_t>(c)] |= (1u << e.u) | (1u << e.v);

    int before = std::max(0, undo.prev_components - 1);
    components[static_cast<size_t>(c)] =
        static_cast<int8_t>(undo.prev_components + delta_components);
    int after = std::max(0, components[static_cast<size_t>(c)] - 1);
    total_deficit += after - before;

    assigned[static_cast<size_t>(pos)] = static_cast<int8_t>(c);
  }

  void undo_assign(int pos, int c, const Undo& undo) {
    const Edge e = edges[static_cast<size_t>(pos)];
    const uint32_t cbit = 1u << c;

    assigned[static_cast<size_t>(pos)] = 0;
    total_deficit = undo.prev_deficit;
    components[static_cast<size_t>(c)] = undo.prev_components;
    class_vertices[static_cast<size_t>(c)] = undo.prev_class_vertices;
    class_adj[static_cast<size_t>(c)][static_cast<size_t>(e.u)] &=
        static_cast<uint8_t>(~(1u << e.v));
    class_adj[static_cast<size_t>(c)][static_cast<size_t>(e.v)] &=
        static_cast<uint8_t>(~(1u << e.u));

    max_used = undo.prev_max_used;
    colors_at[static_cast<size_t>(e.u)] = undo.prev_colors_u;
    colors_at[static_cast<size_t>(e.v)] = undo.prev_colors_v;
    --degree[static_cast<size_t>(e.u)];
    --degree[static_cast<size_t>(e.v)];
    vertex_slack += degree[static_cast<size_t>(e.u)] + degree[static_cast<size_t>(e.v)];

    met[static_cast<size_t>(c)] &= ~undo.newly_met;
    uint32_t bits = undo.newly_met;
    while (bits != 0) {
      int b = std::countr_zero(bits);
      bits &= bits - 1;
      met[static_cast<size_t>(b)] &= ~cbit;
    }
    unmet += std::popcount(undo.newly_met);
  }

  Status run(int pos) {
    if (stop != nullptr && stop->load(std::memory_order_relaxed)) {
      return Status::kAborted;
    }
    if ((++nodes & 4095) == 0 && SteadyClock::now() > deadline) {
      budget_hit = true;
      return Status::kAborted;
    }
    if (pos == m) {
      if (unmet != 0 || max_used != k) return Status::kExhausted;
      if (connected_mode && total_deficit != 0) return Status::kExhausted;
      found_assignment = assigned;  // run() unwinds on the way out
      return Status::kFound;
    }

    const long long remaining = m - pos;
    if (k - max_used > remaining) return Status::kExhausted;
    if (unmet > remaining * 2 * (n - 2)) return Status::kExhausted;
    if (unmet > vertex_slack) return Status::kExhausted;
    if (connected_mode && total_deficit > remaining) return Status::kExhausted;

    const int cmax = canonical ? std::min(max_used + 1, k) : k;
    for (int c = 1; c <= cmax; ++c) {
      Undo undo;
      assign(pos, c, undo);
      Status status = run(pos + 1);
      undo_assign(pos, c, undo);
      if (status != Status::kExhausted) return status;
    }
    return Status::kExhausted;
  }

  EdgeColoring witness() const {
    EdgeColoring out(n, k);
    out.provenance = "search";
    for (int pos = 0; pos < m; ++pos) {
      out.set(edges[static_cast<size_t>(pos)].u, edges[static_cast<size_t>(pos)].v,
              found_assignment[static_cast<size_t>(pos)]);
    }
    return out;
  }
};

struct Feasibility {
  enum class Verdict { kYes, kNo, kUnknown };
  Verdict verdict = Verdict::kUnknown;
  EdgeColoring witness;
  long long nodes = 0;
};

// Enumerates the canonical color prefixes of the first `depth` edges; each
// prefix seeds an independent subtree.
void enumerate_prefixes(int depth, int k, bool canonical, std::vector<int8_t>& prefix,
                        int max_used, std::vector<std::vector<int8_t>>& out) {
  if (static_cast<int>(prefix.size()) == depth) {
    out.push_back(prefix);
    return;
  }
  const int cmax = canonical ? std::min(max_used + 1, k) : k;
  for (int c = 1; c <= cmax; ++c) {
    prefix.push_back(static_cast<int8_t>(c));
    enumerate_prefixes(depth, k, canonical, prefix, std::max(max_used, c), out);
    prefix.pop_back();
  }
}

Feasibility feasible_with_k(const SearchConfig& cfg, int k,
                            SteadyClock::time_point deadline) {
  const bool connected = cfg.mode == SearchMode::connected;
  Feasibility result;

  int threads = std::max(1, cfg.threads);
#ifndef _OPENMP
  threads = 1;
#endif
  if (!cfg.symmetry_breaking) threads = 1;  // k^depth prefixes otherwise
  const int m = static_cast<int>(edge_count(cfg.n));

  if (threads == 1) {
    Dfs dfs;
    dfs.init(cfg.n, k, connected, cfg.symmetry_breaking, deadline, nullptr);
    Dfs::Status status = dfs.run(0);
    result.nodes = dfs.nodes;
    switch (status) {
      case Dfs::Status::kFound:
        result.verdict = Feasibility::Verdict::kYes;
        result.witness = dfs.witness();
        break;
      case Dfs::Status::kExhausted:
        result.verdict = Feasibility::Verdict::kNo;
        break;
      case Dfs::Status::kAborted:
        result.verdict = Feasibility::Verdict::kUnknown;
        break;
    }
    return result;
  }

  const int depth = std::min(5, m);
  std::vector<std::vector<int8_t>> prefixes;
  {
    std::vector<int8_t> prefix;
    enumerate_prefixes(depth, k, cfg.symmetry_breaking, prefix, 0, prefixes);
  }

  std::atomic<bool> stop{false};
  std::atomic<bool> found{false};
  std::atomic<bool> budget{false};
  std::atomic<long long> nodes{0};
  EdgeColoring witness;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (size_t t = 0; t < prefixes.size(); ++t) {
    if (stop.load(std::memory_order_relaxed)) continue;
    Dfs dfs;
    dfs.init(cfg.n, k, connected, cfg.symmetry_breaking, deadline, &stop);
    for (int pos = 0; pos < depth; ++pos) {
      Dfs::Undo undo;
      dfs.assign(pos, prefixes[t][static_cast<size_t>(pos)], undo);
    }
    Dfs::Status status = dfs.run(depth);
    nodes.fetch_add(dfs.nodes, std::memory_order_relaxed);
    if (status == Dfs::Status::kFound) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!found.load()) {
          witness = dfs.witness();
          found.store(true);
        }
      }
      stop.store(true, std::memory_order_relaxed);
    } else if (status == Dfs::Status::kAborted && dfs.budget_hit) {
      budget.store(true, std::memory_order_relaxed);
      stop.store(true, std::memory_order_relaxed);
    }
  }

  result.nodes = nodes.load();
  if (found.load()) {
    result.verdict = Feasibility::Verdict::kYes;
    result.witness = witness;
  } else if (budget.load()) {
    result.verdict = Feasibility::Verdict::kUnknown;
  } else {
    result.verdict = Feasibility::Verdict::kNo;
  }
  return result;
}

// Largest k with C(k,2) <= n * C(n-1,2): every color pair needs a hosting
// vertex and a vertex of degree n-1 hosts at most C(n-1,2) pairs.
int pair_capacity_bound(int n) {
  const long long cap = static_cast<long long>(n) * (n - 1) * (n - 2) / 2;
  int k = 1;
  while (static_cast<long long>(k + 1) * k / 2 <= cap) ++k;
  return k;
}

}  // namespace

const char* to_string(SearchMode mode) {
  return mode == SearchMode::connected ? "connected" : "pseudoachromatic";
}

int search_feasibility_ceiling() { return kCeiling; }

SearchResult exact_index(const SearchConfig& cfg) {
  if (cfg.n < 2) throw TooSmall("search needs n >= 2");
  if (cfg.n > kCeiling) {
    throw UnsupportedOrder("search ceiling is n = " + std::to_string(kCeiling));
  }

  const auto start = SteadyClock::now();
  const auto deadline =
      start + std::chrono::duration_cast<SteadyClock::duration>(
                  std::chrono::duration<double>(cfg.time_budget_seconds));

  SearchResult result;
  result.n = cfg.n;
  result.mode = cfg.mode;

  // Seed the bracket with a witness we can always construct: monochromatic
  // K_n, upgraded to the plane construction once it fits.
  int lower = 1;
  EdgeColoring best_witness(cfg.n, 1);
  for (int u = 0; u < cfg.n; ++u) {
    for (int v = u + 1; v < cfg.n; ++v) best_witness.set(u, v, 1);
  }
  best_witness.provenance = "trivial";
  if (cfg.n >= 7) {
    EdgeColoring seeded = connected_coloring_best(cfg.n);
    lower = seeded.k;
    best_witness = seeded;
  }

  const int k_hi = std::min<int>(static_cast<int>(edge_count(cfg.n)),
                                 pair_capacity_bound(cfg.n));
  int smallest_refuted = k_hi + 1;
  bool budget_exhausted = false;

  for (int k = k_hi; k >= 1; --k) {
    if (k <= lower) {
      // Already witnessed; feasibility is monotone downward in k.
      result.exact = smallest_refuted == lower + 1;
      break;
    }
    Feasibility feas = feasible_with_k(cfg, k, deadline);
    result.nodes += feas.nodes;
    if (feas.verdict == Feasibility::Verdict::kYes) {
      lower = k;
      best_witness = feas.witness;
      result.exact = smallest_refuted == k + 1;
      break;
    }
    if (feas.verdict == Feasibility::Verdict::kNo) {
      smallest_refuted = k;
      continue;
    }
    budget_exhausted = true;
    break;
  }

  result.value_lower = lower;
  result.value_upper = budget_exhausted || !result.exact ? smallest_refuted - 1 : lower;
  result.witness = best_witness;
  result.seconds = std::chrono::duration<double>(SteadyClock::now() - start).count();
  return result;
}

namespace {
constexpr std::array<int, 6> kConnectedReference = {1, 3, 4, 6, 7, 10};  // n = 2..7
constexpr std::array<int, 12> kPseudoReference = {1, 3, 4, 7, 8, 11,
                                                  14, 18, 22, 27, 32, 39};  // n = 2..13
}  // namespace

int reference_connected_index(int n) {
  if (n < 2 || n > 7) throw Error("connected reference table covers n = 2..7");
  return kConnectedReference[static_cast<size_t>(n - 2)];
}

int reference_pseudo_index(int n) {
  if (n < 2 || n > 13) throw Error("pseudoachromatic reference table covers n = 2..13");
  return kPseudoReference[static_cast<size_t>(n - 2)];
}

TableComparison verify_table_prefix(int max_n, double budget_per_run) {
  if (max_n > kCeiling) {
    throw UnsupportedOrder("table comparison limited to n <= " + std::to_string(kCeiling));
  }
  TableComparison out;
  out.all_match = true;
  for (int n = 2; n <= max_n; ++n) {
    TableRow row;
    row.n = n;
    row.connected_ref = reference_connected_index(n);
    row.pseudo_ref = reference_pseudo_index(n);

    SearchConfig cfg;
    cfg.n = n;
    cfg.time_budget_seconds = budget_per_run;
    cfg.mode = SearchMode::connected;
    row.connected = exact_index(cfg);
    cfg.mode = SearchMode::pseudoachromatic;
    row.pseudo = exact_index(cfg);

    row.match = row.connected.exact && row.pseudo.exact &&
                row.connected.value() == row.connected_ref &&
                row.pseudo.value() == row.pseudo_ref;
    out.all_match = out.all_match && row.match;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace psi
