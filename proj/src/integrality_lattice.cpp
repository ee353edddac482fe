#include "ratplane/integrality_lattice.hpp"

#include <algorithm>

namespace ratplane {

bool Congruence::holds(const Integer& x, const Integer& y) const {
  return mod_floor(u * x + v * y, modulus) == 0;
}

Congruence Congruence::canonical(Integer m, Integer u, Integer v) {
  if (m < 1) throw std::invalid_argument("congruence modulus must be >= 1");
  if (m == 1) return {Integer(1), Integer(0), Integer(0)};
  u = mod_floor(u, m);
  v = mod_floor(v, m);
  const Integer g = gcd(gcd(u, m), gcd(v, m));  // gcd(0, m) = m
  if (g > 1) {
    m /= g;
    u = mod_floor(u / g, m);
    v = mod_floor(v / g, m);
  }
  if (m == 1) return {Integer(1), Integer(0), Integer(0)};
  if (u == 0 && v == 0) return {Integer(1), Integer(0), Integer(0)};
  if (v == 0) return {m, Integer(1), Integer(0)};  // gcd(u, m) = 1 after reduction
  if (u == 0) return {m, Integer(0), Integer(1)};
  // two-variable condition: symmetric range, sign fixed by v > 0
  if (2 * u > m) u -= m;
  if (2 * v > m) v -= m;
  if (v < 0) {
    u = -u;
    v = -v;
  }
  return {m, u, v};
}

Congruence row_to_congruence(const Rational& c_sq, const Rational& c_top) {
  const Integer d = lcm(c_sq.get_den(), c_top.get_den());
  const Integer n1 = Integer(Rational(c_sq * d).get_num());
  const Integer n2 = Integer(Rational(c_top * d).get_num());
  return Congruence::canonical(odd_part(d), n1, n2);
}

std::vector<Congruence> build_system(const std::vector<IntegralityRow>& rows) {
  std::vector<Congruence> sys;
  for (const auto& row : rows) {
    Congruence c = row_to_congruence(row.c_sq, row.c_top);
    if (c.vacuous()) continue;
    if (std::find(sys.begin(), sys.end(), c) == sys.end()) sys.push_back(c);
  }
  std::sort(sys.begin(), sys.end(), [](const Congruence& a, const Congruence& b) {
    if (a.modulus != b.modulus) return a.modulus > b.modulus;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return sys;
}

std::optional<Integer> LatticeBasis::index() const {
  if (rank != 2) return std::nullopt;
  return row0[0] * row1[1];
}

bool LatticeBasis::contains(const Integer& x, const Integer& y) const {
  switch (rank) {
    case 0:
      return x == 0 && y == 0;
    case 1: {
      // membership in Z * row0
      const Integer& a = row0[0];
      const Integer& b = row0[1];
      if (a != 0) return x % a == 0 && (x / a) * b == y;
      return x == 0 && b != 0 && y % b == 0;
    }
    default: {
      if (x % row0[0] != 0) return false;
      const Integer alpha = x / row0[0];
      return (y - alpha * row0[1]) % row1[1] == 0;
    }
  }
}

LatticeBasis hnf_of_rows(std::vector<std::array<Integer, 2>> rows) {
  std::erase_if(rows, [](const auto& r) { return r[0] == 0 && r[1] == 0; });

  // clear the first column down to a single pivot via Euclid
  while (true) {
    size_t best = rows.size();
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][0] == 0) continue;
      if (best == rows.size() || abs(rows[i][0]) < abs(rows[best][0])) best = i;
    }
    if (best == rows.size()) break;  // first column all zero
    bool reduced_any = false;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == best || rows[i][0] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][0].get_mpz_t(), rows[best][0].get_mpz_t());
      rows[i][0] -= q * rows[best][0];
      rows[i][1] -= q * rows[best][1];
      reduced_any = true;
    }
    if (!reduced_any) {
      if (best != 0) std::swap(rows[0], rows[best]);
      break;
    }
  }

  LatticeBasis out;
  const bool has_pivot = !rows.empty() && rows[0][0] != 0;
  // gcd of the second column over the remaining rows
  Integer y_gcd(0);
  Integer y_for_pivot(0);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i][0] != 0) {
      y_for_pivot = rows[i][1];
      continue;
    }
    y_gcd = gcd(y_gcd, rows[i][1]);
  }

  if (!has_pivot) {
    if (y_gcd == 0) return out;  // rank 0
    out.rank = 1;
    out.row0 = {Integer(0), abs(y_gcd)};
    return out;
  }

  Integer a = rows[0][0];
  Integer b = y_for_pivot;
  if (a < 0) {
    a = -a;
    b = -b;
  }
  if (y_gcd == 0) {
    out.rank = 1;
    out.row0 = {a, b};
    return out;
  }
  out.rank = 2;
  const Integer c = abs(y_gcd);
  out.row0 = {a, mod_floor(b, c)};
  out.row1 = {Integer(0), c};
  return out;
}

namespace {

// Kernel of (alpha, beta) -> c1*alpha + c2*beta (mod m) as a 2x2 row basis.
std::array<std::array<Integer, 2>, 2> kernel_mod(const Integer& c1_in,
                                                 const Integer& c2_in,
                                                 const Integer& m) {
  const Integer c1 = mod_floor(c1_in, m);
  const Integer c2 = mod_floor(c2_in, m);
  if (c1 == 0) {
    const Integer step = c2 == 0 ? Integer(1) : m / gcd(c2, m);
    return {{{Integer(1), Integer(0)}, {Integer(0), step}}};
  }
  const Integer d = gcd(c1, m);
  const Integer beta0 = d / gcd(c2, d);
  // alpha0 solves c1*alpha = -c2*beta0 (mod m); d divides the right side
  const Integer t = mod_floor(-c2 * beta0, m);
  const Integer md = m / d;
  const Integer alpha0 = mod_floor(mod_inverse(c1 / d, md) * (t / d), md);
  return {{{m / d, Integer(0)}, {alpha0, beta0}}};
}

}  // namespace

LatticeBasis lattice_hnf(const std::vector<Congruence>& system) {
  std::array<std::array<Integer, 2>, 2> basis = {
      {{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}};
  for (const Congruence& c : system) {
    if (c.vacuous()) continue;
    const Integer f1 = c.u * basis[0][0] + c.v * basis[0][1];
    const Integer f2 = c.u * basis[1][0] + c.v * basis[1][1];
    const auto k = kernel_mod(f1, f2, c.modulus);
    std::array<std::array<Integer, 2>, 2> next;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        next[i][j] = k[i][0] * basis[0][j] + k[i][1] * basis[1][j];
    const LatticeBasis h = hnf_of_rows({next[0], next[1]});
    if (h.rank != 2) throw std::logic_error("congruence lattice lost full rank");
    basis = {{{h.row0[0], h.row0[1]}, {h.row1[0], h.row1[1]}}};
  }
  LatticeBasis out;
  out.rank = 2;
  out.row0 = basis[0];
  out.row1 = basis[1];
  return out;
}

}  // namespace ratplane
