#include "ratplane/diophantine.hpp"

#include <algorithm>
#include <cmath>

#include "ratplane/paper_data.hpp"
#include "ratplane/residue_scan.hpp"

namespace ratplane {

SignatureEquation clear_denominators(const Rational& s_pair, const Rational& s_top_coeff) {
  if (s_pair == 0 || s_top_coeff == 0)
    throw std::invalid_argument("clear_denominators requires nonzero coefficients");
  Integer d = lcm(s_pair.get_den(), s_top_coeff.get_den());
  Integer a = Integer(Rational(s_pair * d).get_num());
  Integer b = Integer(Rational(s_top_coeff * d).get_num());
  const Integer g = gcd(gcd(a, b), d);
  a /= g;
  b /= g;
  d /= g;
  return {a, b, d};
}

namespace {

unsigned valuation(Integer n, const Integer& p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Integer int_pow(const Integer& p, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

// Tonelli-Shanks: square root of the quadratic residue n modulo an odd
// prime p.
Integer tonelli_shanks(const Integer& n, const Integer& p) {
  if (p % 4 == 3) return pow_mod(n, (p + 1) / 4, p);
  Integer q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  unsigned m = s;
  Integer c = pow_mod(z, q, p);
  Integer t = pow_mod(n, q, p);
  Integer r = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    unsigned i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = (t2 * t2) % p;
      ++i;
    }
    Integer b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return r;
}

ResidueSet make_empty(const Integer& p, unsigned e, const Integer& q,
                      std::string reason) {
  ResidueSet out;
  out.prime = p;
  out.exponent = e;
  out.prime_power = q;
  out.stride = q;
  out.obstruction = std::move(reason);
  return out;
}

ResidueSet make_stride_set(const Integer& p, unsigned e, const Integer& q,
                           const Integer& stride, std::vector<Integer> residues) {
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  ResidueSet out;
  out.prime = p;
  out.exponent = e;
  out.prime_power = q;
  out.stride = stride;
  out.residues = std::move(residues);
  return out;
}

}  // namespace

Integer ResidueSet::count() const {
  if (residues.empty()) return 0;
  return Integer(static_cast<unsigned long>(residues.size())) * (prime_power / stride);
}

bool ResidueSet::contains(const Integer& x) const {
  return std::binary_search(residues.begin(), residues.end(), mod_floor(x, stride));
}

ResidueSet solve_quadratic_prime_power(const Integer& a_in, const Integer& r_in,
                                       const Integer& p, unsigned e) {
  if (e == 0) throw std::invalid_argument("prime power exponent must be >= 1");
  const Integer q = int_pow(p, e);
  const Integer a = mod_floor(a_in, q);
  const Integer r = mod_floor(r_in, q);

  if (a == 0) {
    if (r == 0) return make_stride_set(p, e, q, Integer(1), {Integer(0)});
    return make_empty(p, e, q,
                      "coefficient vanishes mod " + to_string(q) +
                          " but the target " + to_string(r) + " does not");
  }

  const unsigned i = valuation(a, p);
  if (r == 0) {
    const unsigned h = (e - i + 1) / 2;
    return make_stride_set(p, e, q, int_pow(p, h), {Integer(0)});
  }
  if (valuation(r, p) < i)
    return make_empty(p, e, q,
                      "target valuation at " + to_string(p) +
                          " is below the coefficient's");

  const unsigned e2 = e - i;
  const Integer pi = int_pow(p, i);
  const Integer q2 = q / pi;
  const Integer a2 = a / pi;
  const Integer c = mod_floor((r / pi) * mod_inverse(a2, q2), q2);

  if (c == 0) {
    const unsigned h = (e2 + 1) / 2;
    return make_stride_set(p, e, q, int_pow(p, h), {Integer(0)});
  }
  const unsigned j = valuation(c, p);
  if (j % 2 != 0)
    return make_empty(p, e, q,
                      "target has odd " + to_string(p) + "-adic valuation " +
                          std::to_string(j));
  const Integer c0 = c / int_pow(p, j);
  const unsigned w = e2 - j;
  const Integer pw = int_pow(p, w);

  std::vector<Integer> unit_roots;
  if (p == 2) {
    if (w == 1) {
      unit_roots = {Integer(1)};
    } else if (w == 2) {
      if (c0 % 4 != 1)
        return make_empty(p, e, q, "unit part is 3 mod 4, not a square");
      unit_roots = {Integer(1), Integer(3)};
    } else {
      if (c0 % 8 != 1)
        return make_empty(p, e, q,
                          "unit part is " + to_string(Integer(c0 % 8)) +
                              " mod 8; squares of odd numbers are 1 mod 8");
      Integer z = 1;
      for (unsigned f = 3; f < w; ++f) {
        const Integer mod_next = int_pow(Integer(2), f + 1);
        if (mod_floor(z * z - c0, mod_next) != 0) z += int_pow(Integer(2), f - 1);
      }
      const Integer half = pw / 2;
      unit_roots = {z, mod_floor(-z, pw), mod_floor(z + half, pw),
                    mod_floor(-z + half, pw)};
    }
  } else {
    if (pow_mod(c0, (p - 1) / 2, p) != 1)
      return make_empty(p, e, q,
                        to_string(Integer(c0 % p)) + " is a quadratic non-residue mod " +
                            to_string(p));
    Integer z = tonelli_shanks(mod_floor(c0, p), p);
    // Hensel lift, one exponent at a time
    Integer pf = p;
    for (unsigned f = 1; f < w; ++f) {
      const Integer pf1 = pf * p;
      const Integer num = mod_floor(z * z - c0, pf1) / pf;
      const Integer t = mod_floor(-num * mod_inverse(mod_floor(2 * z, p), p), p);
      z += t * pf;
      pf = pf1;
    }
    z = mod_floor(z, pw);
    unit_roots = {z, mod_floor(-z, pw)};
  }

  const Integer scale = int_pow(p, j / 2);
  const Integer stride = scale * pw;
  std::vector<Integer> residues;
  residues.reserve(unit_roots.size());
  for (const Integer& z : unit_roots) residues.push_back(scale * z);
  return make_stride_set(p, e, q, stride, std::move(residues));
}

bool QuadraticSolutions::empty() const {
  return std::any_of(per_prime_power.begin(), per_prime_power.end(),
                     [](const ResidueSet& s) { return s.empty(); });
}

Integer QuadraticSolutions::count() const {
  Integer n(1);
  for (const auto& s : per_prime_power) n *= s.count();
  return n;
}

bool QuadraticSolutions::contains(const Integer& x) const {
  return std::all_of(per_prime_power.begin(), per_prime_power.end(),
                     [&x](const ResidueSet& s) { return s.contains(x); });
}

namespace {

Integer crt_pair(const Integer& r1, const Integer& m1, const Integer& r2,
                 const Integer& m2) {
  const Integer t = mod_floor((r2 - r1) * mod_inverse(m1 % m2, m2), m2);
  return r1 + m1 * t;
}

}  // namespace

std::optional<Integer> QuadraticSolutions::representative() const {
  if (empty()) return std::nullopt;
  Integer x(0), m(1);
  for (const auto& s : per_prime_power) {
    if (s.stride == 1) continue;
    x = crt_pair(x, m, s.residues.front(), s.stride);
    m *= s.stride;
  }
  return x;
}

QuadraticSolutions solve_quadratic_congruence(const Integer& a, const Integer& r,
                                              const Integer& m,
                                              const FactorConfig& cfg) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  QuadraticSolutions out;
  out.modulus = m;
  if (m == 1) return out;
  const PrimeFactorization fac = factorize(m, cfg);
  for (const auto& f : fac.factors)
    out.per_prime_power.push_back(
        solve_quadratic_prime_power(a, r, f.prime, f.exponent));
  return out;
}

OddKTestResult odd_k_obstruction_test(unsigned k) {
  if (k % 2 != 1) throw std::invalid_argument("odd_k_obstruction_test requires odd k");
  const Integer num = abs(s_top(k).get_num());
  return {num, num != 1};
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Solvable: return "Solvable";
    case Status::Empty: return "Empty";
    case Status::OddKObstruction: return "OddKObstruction";
    case Status::Inconclusive: return "Inconclusive";
    case Status::Undecided: return "Undecided";
  }
  return "?";
}

bool SectorClasses::is_empty() const {
  return std::any_of(per_prime_power.begin(), per_prime_power.end(),
                     [](const ResidueSet& s) { return s.empty(); });
}

Integer SectorClasses::class_count() const {
  if (is_empty()) return 0;
  Integer n(1);
  for (const auto& s : per_prime_power) n *= s.count();
  return n;
}

bool SectorClasses::admits(const Integer& x) const {
  if (is_empty()) return false;
  return std::all_of(per_prime_power.begin(), per_prime_power.end(),
                     [&x](const ResidueSet& s) { return s.contains(x); });
}

std::optional<std::pair<Integer, std::string>> SectorClasses::obstruction() const {
  for (const auto& s : per_prime_power)
    if (s.empty())
      return std::make_pair(s.prime_power,
                            s.obstruction.value_or("no admissible residue"));
  return std::nullopt;
}

namespace {

struct RawCondition {
  Integer modulus, alpha, beta;  // modulus | alpha x^2 + beta
};

// All constraints of one sector as pure quadratic congruence conditions on
// x. With Y = (eps C - A X)/B and X = x^2 (sign folded into A):
//   B | A x^2 - eps C                        (Y integral)
//   B m | (u B - v A) x^2 + v eps C          (each congruence m | uX + vY)
std::vector<RawCondition> sector_conditions(const SignatureEquation& eq,
                                            const std::vector<Congruence>& sys,
                                            int sign_x, int epsilon) {
  const Integer sgn(sign_x > 0 ? 1 : -1);
  const Integer a = sgn * eq.a_sq;
  const Integer c = epsilon > 0 ? eq.c_rhs : Integer(-eq.c_rhs);
  std::vector<RawCondition> conds;
  conds.push_back({eq.b_top, a, -c});
  for (const Congruence& g : sys)
    conds.push_back(
        {eq.b_top * g.modulus, (g.u * eq.b_top - g.v * eq.a_sq) * sgn, g.v * c});
  return conds;
}

// Intersection of two solution sets at the same prime, expressed at the
// coarser of the two strides; the smaller expansion is enumerated.
ResidueSet intersect_same_prime(const ResidueSet& s1, const ResidueSet& s2,
                                const Integer& q, unsigned e) {
  const Integer target = std::max(s1.stride, s2.stride);
  auto expanded_size = [&target](const ResidueSet& s) -> Integer {
    return (target / s.stride) * Integer(static_cast<unsigned long>(s.residues.size()));
  };
  const ResidueSet& en = expanded_size(s1) <= expanded_size(s2) ? s1 : s2;
  const ResidueSet& other = (&en == &s1) ? s2 : s1;
  if (expanded_size(en) > 2'000'000)
    throw std::runtime_error("residue class expansion too large");

  std::vector<Integer> residues;
  const Integer factor = target / en.stride;
  for (Integer t(0); t < factor; ++t)
    for (const Integer& r : en.residues) {
      const Integer x = r + t * en.stride;
      if (other.contains(x)) residues.push_back(x);
    }
  ResidueSet out = make_stride_set(s1.prime, e, q, target, std::move(residues));
  if (out.residues.empty())
    out.obstruction = "conditions intersect to the empty set";
  return out;
}

SectorClasses solve_sector(const SignatureEquation& eq,
                           const std::vector<Congruence>& sys, int sign_x,
                           int epsilon, const Integer& period,
                           const PrimeFactorization& period_fac) {
  SectorClasses sector;
  sector.sign_x = sign_x;
  sector.epsilon = epsilon;
  sector.period = period;
  const auto conds = sector_conditions(eq, sys, sign_x, epsilon);

  for (const auto& block : period_fac.factors) {
    const Integer& p = block.prime;
    const unsigned e_max = block.exponent;
    const Integer q = int_pow(p, e_max);
    ResidueSet acc = make_stride_set(p, e_max, q, Integer(1), {Integer(0)});
    for (const auto& cond : conds) {
      const unsigned e_c = valuation(cond.modulus, p);
      if (e_c == 0) continue;
      ResidueSet sol = solve_quadratic_prime_power(cond.alpha, -cond.beta, p, e_c);
      if (sol.empty()) {
        sol.prime_power = q;
        sol.exponent = e_max;
        sol.stride = q;
        acc = sol;
        break;
      }
      acc = intersect_same_prime(acc, sol, q, e_max);
      if (acc.empty()) break;
    }
    sector.per_prime_power.push_back(std::move(acc));
  }
  return sector;
}

// uint64 view of one sector's residue classes for fast scanning.
struct FastSector {
  bool usable = false;
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> blocks;

  static FastSector build(const SectorClasses& s) {
    FastSector f;
    if (s.is_empty()) return f;
    f.usable = true;
    for (const auto& set : s.per_prime_power) {
      if (set.stride == 1) continue;
      if (!set.stride.fits_ulong_p()) {
        f.usable = false;
        return f;
      }
      std::vector<std::uint64_t> residues;
      residues.reserve(set.residues.size());
      for (const Integer& r : set.residues)
        residues.push_back(r.get_ui());
      f.blocks.emplace_back(set.stride.get_ui(), std::move(residues));
    }
    return f;
  }

  bool admits(std::uint64_t x) const {
    for (const auto& [stride, residues] : blocks)
      if (!std::binary_search(residues.begin(), residues.end(), x % stride))
        return false;
    return true;
  }
};

// Exact k-smallest enumeration of one sector's admissible x. The CRT
// product of the per-prime-power sets is far too large to list, but it
// splits into two groups whose residue lists stay small; the smallest
// combined residues are then read off a heap over (u + v) mod M pairs.
class SectorEnumerator {
 public:
  using u128 = unsigned __int128;

  static std::optional<SectorEnumerator> build(const SectorClasses& s,
                                               std::size_t group_cap = 2'000'000) {
    if (s.is_empty()) return std::nullopt;
    std::vector<const ResidueSet*> blocks;
    for (const auto& set : s.per_prime_power)
      if (set.stride != 1) blocks.push_back(&set);

    SectorEnumerator en;
    if (blocks.empty()) {
      en.period_int_ = 1;
      en.period_ = 1;
      en.ua_ = {0};
      en.vb_ = {0};
      return en;
    }
    // balance the two groups by product of list sizes
    std::sort(blocks.begin(), blocks.end(),
              [](const ResidueSet* a, const ResidueSet* b) {
                return a->residues.size() > b->residues.size();
              });
    struct Group {
      Integer modulus{1};
      std::vector<Integer> values{Integer(0)};
    } ga, gb;
    double load_a = 0, load_b = 0;  // log sizes
    for (const ResidueSet* set : blocks) {
      Group& g = load_a <= load_b ? ga : gb;
      (load_a <= load_b ? load_a : load_b) +=
          std::log(static_cast<double>(set->residues.size()));
      if (g.values.size() * set->residues.size() > group_cap) return std::nullopt;
      std::vector<Integer> next;
      next.reserve(g.values.size() * set->residues.size());
      for (const Integer& v : g.values)
        for (const Integer& r : set->residues)
          next.push_back(crt_pair(v, g.modulus, r, set->stride));
      g.modulus *= set->stride;
      g.values = std::move(next);
    }

    en.period_int_ = ga.modulus * gb.modulus;
    if (mpz_sizeinbase(en.period_int_.get_mpz_t(), 2) > 120) return std::nullopt;
    en.period_ = to_u128(en.period_int_);

    // x = (a T1 + b T2) mod M with the usual CRT cofactors; degenerate
    // groups (modulus 1, single value 0) contribute nothing
    const Integer t1 =
        ga.modulus == 1 ? Integer(0)
        : gb.modulus == 1
            ? Integer(1)
            : Integer(gb.modulus *
                      mod_inverse(mod_floor(gb.modulus, ga.modulus), ga.modulus));
    const Integer t2 =
        gb.modulus == 1 ? Integer(0)
        : ga.modulus == 1
            ? Integer(1)
            : Integer(ga.modulus *
                      mod_inverse(mod_floor(ga.modulus, gb.modulus), gb.modulus));
    en.ua_.reserve(ga.values.size());
    for (const Integer& a : ga.values)
      en.ua_.push_back(to_u128(mod_floor(a * t1, en.period_int_)));
    en.vb_.reserve(gb.values.size());
    for (const Integer& b : gb.values)
      en.vb_.push_back(to_u128(mod_floor(b * t2, en.period_int_)));
    std::sort(en.ua_.begin(), en.ua_.end());
    std::sort(en.vb_.begin(), en.vb_.end());
    return en;
  }

  // the `count` smallest admissible positive x, ascending
  std::vector<Integer> smallest(std::size_t count) const {
    std::vector<Integer> out;
    if (period_ == 1) {
      for (std::size_t i = 1; i <= count; ++i)
        out.push_back(Integer(static_cast<unsigned long>(i)));
      return out;
    }
    // stream per v: candidate x values ascending are u+v-M for u >= M-v,
    // then u+v for u < M-v
    struct Head {
      u128 value;
      std::size_t v_idx;
      std::size_t pos;  // 0..|ua|-1 in stream order
    };
    auto stream_value = [this](std::size_t v_idx, std::size_t pos) -> u128 {
      const u128 v = vb_[v_idx];
      const u128 t = period_ - v;  // v < period
      const auto first_ge =
          std::lower_bound(ua_.begin(), ua_.end(), t) - ua_.begin();
      const std::size_t wrap_count = ua_.size() - first_ge;
      if (pos < wrap_count) return ua_[first_ge + pos] + v - period_;
      return ua_[pos - wrap_count] + v;
    };
    auto cmp = [](const Head& a, const Head& b) {
      return a.value > b.value || (a.value == b.value && a.v_idx > b.v_idx);
    };
    std::vector<Head> heap;
    heap.reserve(vb_.size());
    for (std::size_t i = 0; i < vb_.size(); ++i)
      heap.push_back({stream_value(i, 0), i, 0});
    std::make_heap(heap.begin(), heap.end(), cmp);

    bool zero_seen = false;
    const std::size_t total = ua_.size() * vb_.size();
    std::size_t popped = 0;
    while (out.size() < count && popped < total) {
      std::pop_heap(heap.begin(), heap.end(), cmp);
      Head h = heap.back();
      heap.pop_back();
      ++popped;
      if (h.value == 0)
        zero_seen = true;  // class of multiples of M; smallest positive is M
      else
        out.push_back(from_u128(h.value));
      if (h.pos + 1 < ua_.size()) {
        heap.push_back({stream_value(h.v_idx, h.pos + 1), h.v_idx, h.pos + 1});
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
    // pad from later periods when the class count is below `count`
    std::vector<Integer> base = out;
    if (zero_seen) {
      base.push_back(period_int_);
      std::sort(base.begin(), base.end());
      if (out.size() < count) out = base;
    }
    for (unsigned round = 1; out.size() < count && !base.empty(); ++round)
      for (const Integer& r : base) {
        if (out.size() >= count) break;
        out.push_back(r + round * period_int_);
      }
    out.resize(std::min(out.size(), count));
    return out;
  }

  const Integer& period() const { return period_int_; }

 private:
  static u128 to_u128(const Integer& n) {
    const Integer hi = n >> 64;
    const Integer lo = n - (hi << 64);
    return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
  }
  static Integer from_u128(u128 v) {
    Integer hi(static_cast<unsigned long>(v >> 64));
    return (hi << 64) + Integer(static_cast<unsigned long>(v & ~0ULL));
  }

  u128 period_ = 1;
  Integer period_int_{1};
  std::vector<u128> ua_;  // sorted a*T1 mod M
  std::vector<u128> vb_;  // sorted b*T2 mod M
};

Witness make_witness(const SignatureEquation& eq, const Integer& x, int sign_x,
                     int epsilon, bool minimal) {
  const Integer big_x = sign_x > 0 ? Integer(x * x) : Integer(-(x * x));
  const Integer c = epsilon > 0 ? eq.c_rhs : Integer(-eq.c_rhs);
  const Integer num = c - eq.a_sq * big_x;
  if (num % eq.b_top != 0)
    throw std::logic_error("admissible x does not induce an integral y");
  return {x, num / eq.b_top, sign_x, epsilon, minimal};
}

// Brute-force fallback when the period cannot be factorized: scan all
// residues if the period is small enough, otherwise leave undecided.
std::optional<SectorClasses> brute_force_sector(const SignatureEquation& eq,
                                                const std::vector<Congruence>& sys,
                                                int sign_x, int epsilon,
                                                const Integer& period,
                                                std::uint64_t budget) {
  if (!period.fits_ulong_p() || period.get_ui() > budget) return std::nullopt;
  const std::uint64_t m = period.get_ui();
  std::vector<scan::Condition> conds;
  for (const auto& rc : sector_conditions(eq, sys, sign_x, epsilon)) {
    if (!rc.modulus.fits_ulong_p()) return std::nullopt;
    const std::uint64_t q = rc.modulus.get_ui();
    conds.push_back({q, mod_floor(rc.alpha, rc.modulus).get_ui(),
                     mod_floor(rc.beta, rc.modulus).get_ui()});
  }
  constexpr std::size_t kMaxListed = 1'000'000;
  const scan::Result res = scan::scan_parallel(m, conds, kMaxListed);
  if (!res.hits_complete) return std::nullopt;

  SectorClasses sector;
  sector.sign_x = sign_x;
  sector.epsilon = epsilon;
  sector.period = period;
  ResidueSet block;
  block.prime = 0;
  block.exponent = 1;
  block.prime_power = period;
  block.stride = period;
  for (std::uint64_t h : res.hits) block.residues.emplace_back(static_cast<unsigned long>(h));
  if (block.residues.empty())
    block.obstruction = "exhaustive scan of all " + to_string(period) +
                        " residues found no admissible x";
  sector.per_prime_power.push_back(std::move(block));
  return sector;
}

}  // namespace

Verdict decide(unsigned k, const DecideOptions& opts) {
  if (k < 1) throw std::invalid_argument("decide requires k >= 1");
  Verdict v;
  v.k = k;

  if (k % 2 == 1) {
    v.odd_k_test = odd_k_obstruction_test(k);
    if (v.odd_k_test->obstructed) {
      v.status = Status::OddKObstruction;
      v.note = "numerator of s_k is " + to_string(v.odd_k_test->s_numerator) +
               ", so s_k <p_k, mu> = +-1 has no integer solution";
    } else {
      v.status = Status::Inconclusive;
      v.note = "numerator of s_k is 1; the odd-k obstruction does not apply";
    }
    return v;
  }

  v.system = build_system(integrality_rows(k));
  const SignatureEquation eq = clear_denominators(s_half_pair(k), s_top(k));
  v.equation = eq;

  // global period: all conditions are periodic in x mod B * lcm(moduli)
  Integer period = eq.b_top;
  Integer moduli_lcm(1);
  for (const Congruence& c : v.system) moduli_lcm = lcm(moduli_lcm, c.modulus);
  period *= moduli_lcm;

  bool factored = true;
  PrimeFactorization period_fac;
  try {
    period_fac = factorize(period, opts.factor);
  } catch (const FactorizationError&) {
    factored = false;
  }

  if (factored) {
    try {
      for (int epsilon : {1, -1})
        v.sectors.push_back(solve_sector(eq, v.system, 1, epsilon, period, period_fac));
    } catch (const std::runtime_error& err) {
      v.status = Status::Undecided;
      v.note = std::string("per-prime-power solve failed: ") + err.what();
      return v;
    }
  } else {
    for (int epsilon : {1, -1}) {
      auto sector = brute_force_sector(eq, v.system, 1, epsilon, period,
                                       opts.enumeration_budget);
      if (!sector) {
        v.status = Status::Undecided;
        v.note = "period " + to_string(period) +
                 " could not be factorized and exceeds the brute-force budget";
        v.sectors.clear();
        return v;
      }
      v.sectors.push_back(std::move(*sector));
    }
  }

  const bool any_admissible =
      std::any_of(v.sectors.begin(), v.sectors.end(),
                  [](const SectorClasses& s) { return !s.is_empty(); });
  if (!any_admissible) {
    v.status = Status::Empty;
    return v;
  }

  v.status = Status::Solvable;

  // exact minimal witness via the class enumerators when they fit
  {
    std::optional<std::pair<Integer, std::size_t>> best;
    bool all_exact = true;
    for (std::size_t i = 0; i < v.sectors.size(); ++i) {
      if (v.sectors[i].is_empty()) continue;
      const auto en = SectorEnumerator::build(v.sectors[i]);
      if (!en) {
        all_exact = false;
        break;
      }
      const auto xs = en->smallest(1);
      if (!xs.empty() && (!best || xs.front() < best->first)) best = {xs.front(), i};
    }
    if (all_exact && best) {
      v.witness = make_witness(eq, best->first, v.sectors[best->second].sign_x,
                               v.sectors[best->second].epsilon, true);
      return v;
    }
  }

  // enumerators did not fit: scan up to the bound, then fall back to a CRT
  // representative (valid, minimal only within the search bound)
  std::vector<FastSector> fast;
  fast.reserve(v.sectors.size());
  for (const auto& s : v.sectors) fast.push_back(FastSector::build(s));
  for (std::uint64_t x = 1; x <= opts.witness_scan_limit; ++x) {
    for (std::size_t i = 0; i < v.sectors.size(); ++i) {
      if (!fast[i].usable || !fast[i].admits(x)) continue;
      v.witness = make_witness(eq, Integer(static_cast<unsigned long>(x)),
                               v.sectors[i].sign_x, v.sectors[i].epsilon, true);
      return v;
    }
  }
  for (const auto& s : v.sectors) {
    if (s.is_empty()) continue;
    Integer x(0), m(1);
    for (const auto& set : s.per_prime_power) {
      if (set.stride == 1) continue;
      x = crt_pair(x, m, set.residues.front(), set.stride);
      m *= set.stride;
    }
    if (x == 0) x = m;
    v.witness = make_witness(eq, x, s.sign_x, s.epsilon, false);
    break;
  }
  return v;
}

std::vector<Witness> enumerate_solutions(const Verdict& verdict, std::size_t count,
                                         const DecideOptions& opts) {
  if (verdict.status != Status::Solvable)
    throw std::invalid_argument("enumerate_solutions: verdict is not Solvable");
  if (!verdict.equation) throw std::invalid_argument("verdict lacks an equation");

  // (x, sector index) merged ascending across sectors
  bool all_exact = true;
  std::vector<std::pair<Integer, std::size_t>> merged;
  for (std::size_t i = 0; i < verdict.sectors.size(); ++i) {
    if (verdict.sectors[i].is_empty()) continue;
    const auto en = SectorEnumerator::build(verdict.sectors[i]);
    if (!en) {
      all_exact = false;
      break;
    }
    for (const Integer& x : en->smallest(count)) merged.emplace_back(x, i);
  }
  if (all_exact) {
    std::sort(merged.begin(), merged.end());
    std::vector<Witness> out;
    for (std::size_t i = 0; i < merged.size() && out.size() < count; ++i)
      out.push_back(make_witness(*verdict.equation, merged[i].first,
                                 verdict.sectors[merged[i].second].sign_x,
                                 verdict.sectors[merged[i].second].epsilon, true));
    return out;
  }

  std::vector<FastSector> fast;
  for (const auto& s : verdict.sectors) fast.push_back(FastSector::build(s));
  std::vector<Witness> out;
  for (std::uint64_t x = 1; out.size() < count && x <= opts.enumeration_budget; ++x) {
    for (size_t i = 0; i < verdict.sectors.size() && out.size() < count; ++i) {
      if (!fast[i].usable || !fast[i].admits(x)) continue;
      out.push_back(make_witness(*verdict.equation,
                                 Integer(static_cast<unsigned long>(x)),
                                 verdict.sectors[i].sign_x,
                                 verdict.sectors[i].epsilon, true));
    }
  }
  return out;
}

std::vector<Witness> enumerate_solutions(unsigned k, std::size_t count,
                                         const DecideOptions& opts) {
  return enumerate_solutions(decide(k, opts), count, opts);
}

bool VerifyReport::all_pass() const {
  if (!equation_pass || !nonzero_x) return false;
  return std::all_of(recomputed.begin(), recomputed.end(),
                     [](const ConstraintCheck& c) { return c.pass; });
}

VerifyReport verify_solution(unsigned k, const Integer& x, const Integer& y,
                             int sign_x, int epsilon) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("verify_solution requires even k >= 2");
  VerifyReport rep;
  rep.k = k;
  rep.x = x;
  rep.y = y;
  rep.sign_x = sign_x;
  rep.epsilon = epsilon;

  const SignatureEquation eq = clear_denominators(s_half_pair(k), s_top(k));
  const Integer big_x = sign_x > 0 ? Integer(x * x) : Integer(-(x * x));
  const Integer c = epsilon > 0 ? eq.c_rhs : Integer(-eq.c_rhs);
  rep.residual = eq.a_sq * big_x + eq.b_top * y - c;
  rep.equation_pass = rep.residual == 0;
  rep.nonzero_x = x != 0;

  for (const Congruence& g : build_system(integrality_rows(k))) {
    ConstraintCheck check;
    check.name = to_string(g.modulus) + " | " + to_string(g.u) + " X + " +
                 to_string(g.v) + " Y";
    check.pass = g.holds(big_x, y);
    if (!check.pass)
      check.detail = "residue " + to_string(mod_floor(g.u * big_x + g.v * y, g.modulus));
    rep.recomputed.push_back(std::move(check));
  }

  auto add_reference = [&rep, &big_x, &y](const ReferenceCongruence& g) {
    ConstraintCheck check;
    check.name = to_string(g.modulus) + " | " + to_string(g.u) + " X + " +
                 to_string(g.v) + " Y (published)";
    check.pass = mod_floor(g.u * big_x + g.v * y, g.modulus) == 0;
    if (!check.pass)
      check.detail = "residue " + to_string(mod_floor(g.u * big_x + g.v * y, g.modulus));
    rep.reference.push_back(std::move(check));
  };
  if (k == 8)
    for (const auto& g : reference_dim32_system()) add_reference(g);
  if (k == 4) add_reference(reference_dim16_congruence());

  return rep;
}

}  // namespace ratplane
