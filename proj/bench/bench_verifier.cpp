// Compares the OpenMP verifier kernels against the serial reference
// implementations on the constructed colorings and checks that both routes
// agree.
//
//   ./bench_verifier [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "psi/constructions.hpp"
#include "psi/verifier.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(int reps, Fn&& fn) {
  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

struct Case {
  std::string name;
  psi::EdgeColoring coloring;
};

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  std::vector<Case> cases;
  cases.push_back({"theorem3 q=8  (n=73,  k=292)", psi::theorem3_coloring(8).coloring});
  cases.push_back({"theorem5 q=8  (n=73,  k=525)", psi::theorem5_coloring(8).coloring});
  cases.push_back({"theorem3 q=16 (n=273, k=2184)", psi::theorem3_coloring(16).coloring});
  cases.push_back({"theorem5 q=16 (n=273, k=4125)", psi::theorem5_coloring(16).coloring});

  std::printf("%-32s %14s %14s %8s\n", "case", "serial (ms)", "parallel (ms)", "speedup");
  bool all_agree = true;
  for (const auto& c : cases) {
    psi::CompletenessCheck ref = psi::check_complete_serial(c.coloring);
    psi::CompletenessCheck par = psi::check_complete(c.coloring);
    psi::ConnectivityCheck ref_conn = psi::check_connected_serial(c.coloring);
    psi::ConnectivityCheck par_conn = psi::check_connected(c.coloring);
    if (ref.complete != par.complete || ref.witness.a != par.witness.a ||
        ref.witness.b != par.witness.b || ref_conn.connected != par_conn.connected ||
        ref_conn.witness_class != par_conn.witness_class) {
      std::printf("%-32s VERDICT MISMATCH\n", c.name.c_str());
      all_agree = false;
      continue;
    }

    double serial_ms = time_ms(reps, [&] {
      psi::check_complete_serial(c.coloring);
      psi::check_connected_serial(c.coloring);
    });
    double parallel_ms = time_ms(reps, [&] {
      psi::check_complete(c.coloring);
      psi::check_connected(c.coloring);
    });
    std::printf("%-32s %14.2f %14.2f %7.2fx\n", c.name.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms);
  }
  return all_agree ? 0 : 1;
}
