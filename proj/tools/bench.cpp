// Benchmark of the trial dispatcher: runs the same seeded experiment workload
// through the serial reference loop and the OpenMP work-shared loop, reports
// wall-clock times, and verifies that the outputs are bitwise identical.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "tropsvm/experiments.hpp"
#include "tropsvm/parallel.hpp"
#include "tropsvm/rng.hpp"

using namespace tropsvm;

namespace {

double run_trials(bool parallel, std::vector<TrialOutcome>& out) {
  const auto start = std::chrono::steady_clock::now();
  for_each_trial(static_cast<int>(out.size()), parallel, [&](std::size_t t) {
    out[t] = run_gaussian_trial(20, 20, std::sqrt(2.0), 1.0, trial_seed(1, t));
  });
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 64;
  if (trials == 0) {
    std::fprintf(stderr, "usage: %s [trials>0]\n", argv[0]);
    return 2;
  }
  std::printf("gaussian benchmark trials: %zu (d=20, 20 points per class)\n", trials);
  std::printf("OpenMP compiled in: %s\n", parallel_enabled() ? "yes" : "no");

  std::vector<TrialOutcome> serial(trials), parallel(trials);
  const double t_serial = run_trials(false, serial);
  const double t_parallel = run_trials(true, parallel);

  const bool identical =
      std::memcmp(serial.data(), parallel.data(), trials * sizeof(TrialOutcome)) == 0;
  std::printf("serial reference: %8.3f s\n", t_serial);
  std::printf("parallel loop:    %8.3f s  (speedup %.2fx)\n", t_parallel,
              t_parallel > 0.0 ? t_serial / t_parallel : 0.0);
  std::printf("outputs bitwise identical: %s\n", identical ? "yes" : "no");
  return identical ? 0 : 1;
}
