// Exact integer/rational arithmetic: Bernoulli numbers, dyadic tests,
// factorization. Arbitrary-precision values are GMP-backed; everything
// downstream computes over these types, never over floating point.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratplane {

using Integer = mpz_class;
using Rational = mpq_class;

// Decimal string for integers, "num/den" (lowest terms) for rationals with
// denominator > 1, plain "num" otherwise.
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s);  // accepts "n" or "n/d"

// num/den with canonicalization; throws on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// n with all factors of two removed; requires n >= 1.
Integer odd_part(const Integer& n);

// true iff the lowest-terms denominator of q is a power of two,
// i.e. q lies in Z[1/2].
bool is_dyadic(const Rational& q);

// Bernoulli number B_n under the convention B_1 = -1/2 (B_n = 0 for odd
// n >= 3). Values are computed by the defining recurrence
// sum_j C(n+1, j) B_j = 0 and cached; the cache is mutex-guarded.
Rational bernoulli(unsigned n);

// a mod m mapped into [0, m); requires m >= 1.
Integer mod_floor(const Integer& a, const Integer& m);

// Inverse of a mod m; throws std::domain_error when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m);

// Deterministic Miller-Rabin for n < 3.317e24 (fixed 12-base set); the same
// bases are used above that bound, where the test becomes probabilistic.
// Nothing in this project factors integers anywhere near that large.
bool is_probable_prime(const Integer& n);

struct PrimeFactor {
  Integer prime;
  unsigned exponent = 0;
};

struct PrimeFactorization {
  bool negative = false;
  std::vector<PrimeFactor> factors;  // sorted by prime

  Integer value() const;  // recomposes the factored integer, sign included
};

struct FactorConfig {
  std::uint64_t trial_bound = 1'000'000;    // trial division limit
  std::uint64_t rho_seed = 0;               // seed for the Brent-rho stage
  std::uint64_t rho_max_iters = 20'000'000; // total rho iteration budget
};

// Raised when the probabilistic stage exhausts its iteration budget.
// Factorization never returns a wrong answer; it fails loudly instead.
struct FactorizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complete factorization of n, |n| >= 2. Trial division up to
// cfg.trial_bound, then seeded Pollard rho with Brent cycle detection.
// Deterministic for a fixed seed.
PrimeFactorization factorize(const Integer& n, const FactorConfig& cfg = {});

}  // namespace ratplane
