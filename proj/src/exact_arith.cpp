#include "ratplane/exact_arith.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace ratplane {

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(const std::string& s) {
  Integer n;
  if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return n;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  return make_rational(parse_integer(s.substr(0, slash)),
                       parse_integer(s.substr(slash + 1)));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer numerator(const Rational& q) { return q.get_num(); }
Integer denominator(const Rational& q) { return q.get_den(); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer odd_part(const Integer& n) {
  if (n < 1) throw std::invalid_argument("odd_part requires n >= 1");
  const mp_bitcnt_t v = mpz_scan1(n.get_mpz_t(), 0);
  Integer r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), n.get_mpz_t(), v);
  return r;
}

bool is_dyadic(const Rational& q) { return odd_part(q.get_den()) == 1; }

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache;  // cache[i] = B_i
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.emplace_back(1);
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j)
      acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(acc / Rational(-(static_cast<long>(m)) - 1));
  }
  return cache[n];
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m < 1) throw std::invalid_argument("mod_floor requires m >= 1");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: " + to_string(a) +
                            " not invertible mod " + to_string(m));
  return r;
}

Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  static const unsigned long kBases[] = {2,  3,  5,  7,  11, 13,
                                         17, 19, 23, 29, 31, 37};
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  // Miller-Rabin, n odd > 37 here.
  const Integer nm1 = n - 1;
  const mp_bitcnt_t s = mpz_scan1(nm1.get_mpz_t(), 0);
  Integer d;
  mpz_tdiv_q_2exp(d.get_mpz_t(), nm1.get_mpz_t(), s);
  for (unsigned long b : kBases) {
    Integer x = pow_mod(Integer(b), d, n);
    if (x == 1 || x == nm1) continue;
    bool composite = true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Integer PrimeFactorization::value() const {
  Integer v(1);
  for (const auto& f : factors) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    v *= pw;
  }
  return negative ? Integer(-v) : v;
}

namespace {

const std::vector<std::uint32_t>& small_primes(std::uint64_t bound) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  static std::uint64_t sieved_to = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (bound > sieved_to) {
    primes.clear();
    std::vector<bool> comp(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
      if (comp[i]) continue;
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
    }
    sieved_to = bound;
  }
  return primes;
}

// Pollard rho with Brent cycle detection; returns a nontrivial factor of n
// (n composite, no small factors) or throws when the budget runs out.
Integer brent_rho(const Integer& n, std::uint64_t seed, std::uint64_t& budget) {
  std::mt19937_64 rng(seed);
  while (true) {
    const Integer x0 = mod_floor(Integer(rng()), n);
    const Integer c = mod_floor(Integer(rng()), n - 1) + 1;
    Integer y = x0, d = 1;
    std::uint64_t r = 1;
    Integer x, ys;
    const std::uint64_t batch = 128;
    while (d == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && d == 1; k += batch) {
        ys = y;
        Integer q = 1;
        const std::uint64_t lim = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        if (budget < lim) throw FactorizationError("rho budget exhausted for " + to_string(n));
        budget -= lim;
        d = gcd(q, n);
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        d = gcd(abs(x - ys), n);
        if (budget == 0) throw FactorizationError("rho budget exhausted for " + to_string(n));
        --budget;
      } while (d == 1);
    }
    if (d != n) return d;
    // degenerate cycle; retry with fresh parameters
  }
}

void factor_rec(const Integer& n, std::uint64_t seed, std::uint64_t& budget,
                std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  const Integer d = brent_rho(n, seed, budget);
  factor_rec(d, seed + 1, budget, out);
  factor_rec(n / d, seed + 1, budget, out);
}

}  // namespace

PrimeFactorization factorize(const Integer& n, const FactorConfig& cfg) {
  if (abs(n) < 2) throw std::invalid_argument("factorize requires |n| >= 2");
  PrimeFactorization out;
  out.negative = n < 0;
  Integer rem = abs(n);

  std::vector<Integer> primes_found;
  for (std::uint32_t p : small_primes(cfg.trial_bound)) {
    if (p > cfg.trial_bound) break;
    if (Integer(p) * p > rem) break;
    while (rem % p == 0) {
      primes_found.emplace_back(p);
      rem /= p;
    }
    if (rem == 1) break;
  }
  if (rem > 1) {
    if (is_probable_prime(rem)) {
      primes_found.push_back(rem);
    } else {
      std::uint64_t budget = cfg.rho_max_iters;
      factor_rec(rem, cfg.rho_seed, budget, primes_found);
    }
  }

  std::sort(primes_found.begin(), primes_found.end());
  for (const Integer& p : primes_found) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

}  // namespace ratplane
