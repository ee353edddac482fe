// Brute-force residue scan kernels: given conditions q | a*x^2 + b, walk
// every x in [0, modulus) and report the satisfying residues. This is the
// data-parallel inner loop behind the exhaustive-scan oracles and the
// fallback decision path; an OpenMP kernel does the work in production and
// a serial reference implementation is kept for testing against it.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ratplane::scan {

// q | a*x^2 + b with a, b reduced into [0, q).
struct Condition {
  std::uint64_t q = 1;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

struct Result {
  std::uint64_t modulus = 0;
  std::uint64_t hit_count = 0;          // exact, regardless of max_hits
  std::vector<std::uint64_t> hits;      // ascending; first min(hit_count, max_hits)
  bool hits_complete = true;            // hits.size() == hit_count
};

bool satisfies(std::uint64_t x, std::span<const Condition> conds);

// Reference implementation: plain loop over [0, modulus).
Result scan_serial(std::uint64_t modulus, std::span<const Condition> conds,
                   std::size_t max_hits = SIZE_MAX);

// OpenMP kernel; identical output to scan_serial for every input.
Result scan_parallel(std::uint64_t modulus, std::span<const Condition> conds,
                     std::size_t max_hits = SIZE_MAX);

}  // namespace ratplane::scan
