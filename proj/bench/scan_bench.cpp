// Timing comparison of the serial reference scan against the OpenMP kernel.
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ratplane/residue_scan.hpp"

using ratplane::scan::Condition;

namespace {

template <typename F>
double time_once(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::uint64_t, std::vector<Condition>>> cases = {
      {2828954, {{2828954, 40247, 638512875 % 2828954}}},
      {50'000'000, {{99225, 1, 0}, {315, 420176, 17}, {2828954, 40247, 1}}},
      {200'000'000,
       {{638512875 % 200'000'000, 8822527 % 63851287, 2},
        {99225, 1, 0},
        {467775, 678599 % 467775, 1302}}},
  };

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP not enabled)\n");
#endif
  std::printf("%14s %10s %12s %12s %9s %14s\n", "modulus", "conds", "serial(s)",
              "parallel(s)", "speedup", "hits");
  for (const auto& [modulus, conds] : cases) {
    std::uint64_t hits_serial = 0, hits_parallel = 0;
    const double ts = time_once([&] {
      hits_serial = ratplane::scan::scan_serial(modulus, conds, 0).hit_count;
    });
    const double tp = time_once([&] {
      hits_parallel = ratplane::scan::scan_parallel(modulus, conds, 0).hit_count;
    });
    if (hits_serial != hits_parallel) {
      std::printf("MISMATCH: %llu vs %llu\n",
                  static_cast<unsigned long long>(hits_serial),
                  static_cast<unsigned long long>(hits_parallel));
      return 1;
    }
    std::printf("%14llu %10zu %12.3f %12.3f %8.2fx %14llu\n",
                static_cast<unsigned long long>(modulus), conds.size(), ts, tp,
                ts / tp, static_cast<unsigned long long>(hits_serial));
  }
  return 0;
}
