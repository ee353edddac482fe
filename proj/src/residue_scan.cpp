#include "ratplane/residue_scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ratplane::scan {

bool satisfies(std::uint64_t x, std::span<const Condition> conds) {
  for (const Condition& c : conds) {
    const std::uint64_t xq = x % c.q;
    const std::uint64_t sq = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(xq) * xq) % c.q);
    const std::uint64_t val = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(c.a) * sq + c.b) % c.q);
    if (val != 0) return false;
  }
  return true;
}

Result scan_serial(std::uint64_t modulus, std::span<const Condition> conds,
                   std::size_t max_hits) {
  Result r;
  r.modulus = modulus;
  for (std::uint64_t x = 0; x < modulus; ++x) {
    if (!satisfies(x, conds)) continue;
    ++r.hit_count;
    if (r.hits.size() < max_hits) r.hits.push_back(x);
  }
  r.hits_complete = r.hits.size() == r.hit_count;
  return r;
}

Result scan_parallel(std::uint64_t modulus, std::span<const Condition> conds,
                     std::size_t max_hits) {
#ifndef _OPENMP
  return scan_serial(modulus, conds, max_hits);
#else
  const int threads = omp_get_max_threads();
  std::vector<std::vector<std::uint64_t>> chunk_hits(threads);
  std::vector<std::uint64_t> chunk_counts(threads, 0);

  // contiguous chunks in ascending order so the merged hit list is
  // independent of scheduling
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    const std::uint64_t lo = modulus / threads * t +
                             std::min<std::uint64_t>(t, modulus % threads);
    const std::uint64_t hi = lo + modulus / threads +
                             (static_cast<std::uint64_t>(t) < modulus % threads ? 1 : 0);
    auto& hits = chunk_hits[t];
    std::uint64_t count = 0;
    for (std::uint64_t x = lo; x < hi; ++x) {
      if (!satisfies(x, conds)) continue;
      ++count;
      if (hits.size() < max_hits) hits.push_back(x);
    }
    chunk_counts[t] = count;
  }

  Result r;
  r.modulus = modulus;
  for (int t = 0; t < threads; ++t) {
    r.hit_count += chunk_counts[t];
    for (std::uint64_t x : chunk_hits[t]) {
      if (r.hits.size() >= max_hits) break;
      r.hits.push_back(x);
    }
  }
  r.hits_complete = r.hits.size() == r.hit_count;
  return r;
#endif
}

}  // namespace ratplane::scan
