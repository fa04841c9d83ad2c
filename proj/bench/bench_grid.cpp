// Timing comparison of the serial reference kernels against the OpenMP
// ones. Usage: uradius_bench [n_radii n_angles n_oracle_samples]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "uradius/analysis.hpp"
#include "uradius/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace uradius;

namespace {

double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

template <typename Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now();
    fn();
    best = std::min(best, now() - t0);
  }
  return best;
}

NormalizedFunction bench_function() {
  // order-64 member with geometrically decaying coefficients summing to 1
  std::mt19937_64 eng(7);
  std::vector<Complex> c(kDefaultOrder + 1, Complex(0, 0));
  c[1] = Complex(1, 0);
  double decay = 1.0, sum = 0.0;
  for (int n = 2; n <= kDefaultOrder; ++n) {
    const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    c[n] = Complex(u * decay, 0.3 * u * decay);
    decay *= 0.85;
    sum += n * std::abs(c[n]);
  }
  for (int n = 2; n <= kDefaultOrder; ++n) c[n] *= 1.0 / sum;
  return NormalizedFunction(TruncatedSeries(std::move(c)));
}

}  // namespace

int main(int argc, char** argv) {
  int n_radii = 256, n_angles = 1024, n_oracle = 20000;
  if (argc >= 3) {
    n_radii = std::atoi(argv[1]);
    n_angles = std::atoi(argv[2]);
  }
  if (argc >= 4) n_oracle = std::atoi(argv[3]);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  const NormalizedFunction f = bench_function();
  DiskGrid grid = DiskGrid::defaults(0.99);
  grid.n_radii = n_radii;
  grid.n_angles = n_angles;

  std::printf("kernel,n,serial_s,parallel_s,speedup,threads\n");

  {
    MembershipReport a, b;
    const double ts = best_of(3, [&] { a = check_on_disk_serial(f, Quantity::U, grid); });
    const double tp = best_of(3, [&] { b = check_on_disk(f, Quantity::U, grid); });
    if (a.sup_modulus != b.sup_modulus || a.witness != b.witness) {
      std::fprintf(stderr, "kernel mismatch: serial and parallel reports differ\n");
      return 1;
    }
    std::printf("check_on_disk,%d,%.4f,%.4f,%.2f,%d\n", grid.size(), ts, tp, ts / tp, threads);
  }

  {
    // collision search on z + z^2 past its univalence radius
    std::vector<Complex> c(kDefaultOrder + 1, Complex(0, 0));
    c[1] = Complex(1, 0);
    c[2] = Complex(1, 0);
    const NormalizedFunction g{TruncatedSeries(std::move(c))};
    UnivalenceResult a, b;
    const double ts = best_of(3, [&] { a = univalence_oracle_serial(g, 0.6, n_oracle); });
    const double tp = best_of(3, [&] { b = univalence_oracle(g, 0.6, n_oracle); });
    if (a.univalent != b.univalent) {
      std::fprintf(stderr, "kernel mismatch: oracle verdicts differ\n");
      return 1;
    }
    std::printf("univalence_oracle,%d,%.4f,%.4f,%.2f,%d\n", n_oracle, ts, tp, ts / tp, threads);
  }

  return 0;
}
