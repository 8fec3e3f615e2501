// Compares the serial top-k DP against the OpenMP-parallel variant on
// generated instances and checks that both return identical candidates.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "cos/bench.hpp"
#include "cos/solvers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double best_of_3_ms(F&& fn) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int k = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both variants run serially\n");
#endif
  std::printf("%8s %12s %12s %10s\n", "n", "serial_ms", "parallel_ms",
              "speedup");
  for (int n : {50, 100, 200, 500, 1000}) {
    cosched::GenConfig cfg;
    cfg.n_events = n;
    cfg.seed = 42;
    cosched::Instance instance = cosched::generate_instance(cfg);

    cosched::TopKResult serial = cosched::solve_dp_topk(instance, k);
    cosched::TopKResult parallel = cosched::solve_dp_topk_parallel(instance, k);
    if (serial.candidates.size() != parallel.candidates.size()) {
      std::fprintf(stderr, "mismatch at n=%d: candidate counts differ\n", n);
      return 1;
    }
    for (std::size_t i = 0; i < serial.candidates.size(); ++i) {
      if (serial.candidates[i].schedule.event_ids !=
          parallel.candidates[i].schedule.event_ids) {
        std::fprintf(stderr, "mismatch at n=%d rank %zu\n", n, i);
        return 1;
      }
    }

    double ts = best_of_3_ms([&] { cosched::solve_dp_topk(instance, k); });
    double tp = best_of_3_ms([&] { cosched::solve_dp_topk_parallel(instance, k); });
    std::printf("%8d %12.2f %12.2f %9.2fx\n", n, ts, tp, ts / tp);
  }
  return 0;
}
