// Times the serial reference kernels against their OpenMP counterparts on a
// few representative inputs and prints a comparison table.

#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "ecodim/kernels.hpp"
#include "ecodim/matroid.hpp"

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = now();
    f();
    double t1 = now();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

void row(const std::string& name, double serial, double parallel) {
  std::printf("%-34s %10.4fs %10.4fs %8.2fx\n", name.c_str(), serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
  using namespace ecodim;

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    Matroid m = uniform(8, 17);
    const auto& t = m.rank_table();
    row("rank-axiom scan, U(8,17)",
        time_best_of(3, [&] { kernels::check_rank_axioms_serial(t, 17); }),
        time_best_of(3, [&] { kernels::check_rank_axioms_parallel(t, 17); }));
  }
  {
    Matroid m = uniform(8, 16);
    std::vector<Mask> bases = m.bases();  // 12870 bases
    row("rank fold from bases, U(8,16)",
        time_best_of(3, [&] { kernels::rank_from_bases_serial(16, bases); }),
        time_best_of(3, [&] { kernels::rank_from_bases_parallel(16, bases); }));
  }
  {
    Matroid m = uniform(8, 17);
    const auto& t = m.rank_table();
    row("component meet, U(8,17)",
        time_best_of(3, [&] { kernels::component_meet_serial(t, 17); }),
        time_best_of(3, [&] { kernels::component_meet_parallel(t, 17); }));
  }
  {
    Matroid m = uniform(7, 15);
    const auto& t = m.rank_table();
    row("nested-pair counts, U(7,15)",
        time_best_of(3, [&] { kernels::nested_pair_counts_serial(t, 15); }),
        time_best_of(3, [&] { kernels::nested_pair_counts_parallel(t, 15); }));
  }
  return 0;
}
