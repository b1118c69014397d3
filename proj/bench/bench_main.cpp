// Times the OpenMP batch kernels against their serial reference
// implementations on Kuhn-sized workloads and checks they agree exactly.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forel/batch.hpp"

using namespace forel;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  fn();  // warm-up
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

void row(const char* name, double serial_ms, double omp_ms, bool equal) {
  std::printf("%-24s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms, omp_ms,
              serial_ms / omp_ms, equal ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  if (scale < 1) scale = 1;
  GameTree game = build_kuhn_poker();
  Regularizer reg{RegularizerKind::entropy};

#ifdef _OPENMP
  std::printf("threads: %d, workload scale: %d\n", omp_get_max_threads(), scale);
#endif
  std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    std::vector<Policy> policies;
    for (int i = 0; i < 256 * scale; ++i) policies.push_back(random_interior_policy(game, i));
    std::vector<double> a, b;
    double s = time_ms([&] { a = batch_nash_conv_serial(game, policies); }, 3);
    double p = time_ms([&] { b = batch_nash_conv_omp(game, policies); }, 3);
    row("nash_conv x256", s, p, a == b);
  }
  {
    std::vector<AnchorTriple> cases;
    for (int i = 0; i < 128 * scale; ++i)
      cases.push_back({random_interior_policy(game, 3 * i), random_interior_policy(game, 3 * i + 1),
                       random_interior_policy(game, 3 * i + 2)});
    std::vector<double> a, b;
    double s = time_ms([&] { a = batch_anchor_identity_serial(game, 0.5, cases); }, 3);
    double p = time_ms([&] { b = batch_anchor_identity_omp(game, 0.5, cases); }, 3);
    row("anchor_identity_residuals x128", s, p, a == b);
  }
  {
    BaseReward base;
    std::vector<std::pair<Policy, Policy>> pairs;
    for (int i = 0; i < 128 * scale; ++i)
      pairs.emplace_back(random_interior_policy(game, i), random_interior_policy(game, 9000 + i));
    std::vector<double> a, b;
    double s = time_ms([&] { a = batch_monotonicity_sum_serial(game, pairs, base); }, 3);
    double p = time_ms([&] { b = batch_monotonicity_sum_omp(game, pairs, base); }, 3);
    row("monotonicity_sum x128", s, p, a == b);
  }
  {
    std::vector<Blocks> points;
    for (int i = 0; i < 64 * scale; ++i) points.push_back(random_blocks(game, i, 2.0));
    std::vector<double> a, b;
    double s = time_ms([&] { a = batch_divergence_max_serial(game, reg, points, 1e-5); }, 3);
    double p = time_ms([&] { b = batch_divergence_max_omp(game, reg, points, 1e-5); }, 3);
    row("divergence_probe x64", s, p, a == b);
  }
  return 0;
}
