// Conversion of integrality rows into congruence conditions on the two
// surviving pairings (X, Y) = (<p_{k/2}^2, mu>, <p_k, mu>), and Hermite
// normal form canonicalization of the resulting sublattice of Z^2.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ratplane/char_classes.hpp"

namespace ratplane {

// modulus | u*X + v*Y with odd modulus >= 1; modulus 1 is vacuous.
// Canonical form: gcd(u, v, modulus) divided out; a single-variable
// condition is scaled to unit coefficient; otherwise u, v sit in the
// symmetric range with v > 0 (v != 0 has odd modulus, so the range has no
// boundary ties).
struct Congruence {
  Integer modulus, u, v;

  bool vacuous() const { return modulus == 1; }
  bool holds(const Integer& x, const Integer& y) const;
  bool operator==(const Congruence&) const = default;

  static Congruence canonical(Integer m, Integer u, Integer v);
};

// Translate a row (c_sq, c_top) of the integrality table: with D the lcm of
// the denominators, the Z[1/2]-condition constrains only the odd part of D,
// so the congruence is odd_part(D) | (c_sq D) X + (c_top D) Y.
Congruence row_to_congruence(const Rational& c_sq, const Rational& c_top);

// All rows converted, vacuous conditions dropped, canonical duplicates
// removed; ordered by descending modulus. The implicit conditions X, Y in Z
// are carried by the ambient lattice Z^2 rather than as list entries.
std::vector<Congruence> build_system(const std::vector<IntegralityRow>& rows);

// Row basis of a sublattice of Z^2 in Hermite normal form. Full-rank bases
// are upper triangular with positive diagonal and reduced off-diagonal
// entry; index = product of the diagonal.
struct LatticeBasis {
  int rank = 0;
  std::array<Integer, 2> row0{Integer(0), Integer(0)};
  std::array<Integer, 2> row1{Integer(0), Integer(0)};

  std::optional<Integer> index() const;
  bool contains(const Integer& x, const Integer& y) const;
  bool operator==(const LatticeBasis&) const = default;
};

// HNF of the span of the given row vectors.
LatticeBasis hnf_of_rows(std::vector<std::array<Integer, 2>> rows);

// HNF basis of { (X, Y) in Z^2 : every congruence holds }. Always full rank
// (the lattice contains M Z^2 for M the product of the moduli).
LatticeBasis lattice_hnf(const std::vector<Congruence>& system);

}  // namespace ratplane
