// Cross-validation layer built from explicit manifolds: complex projective
// spaces, their products, and degree-(1,1) hypersurfaces. Pontryagin
// numbers, s-numbers and L-genus pairings are computed in truncated
// cohomology rings with exact integer coefficients, independently of the
// symmetric-function pipeline they validate.
#pragma once

#include <string>
#include <vector>

#include "ratplane/integrality_lattice.hpp"

namespace ratplane {

// Truncated commutative ring Z[a_1..a_r]/(a_i^{cap_i + 1}); elements are
// dense coefficient vectors in mixed-radix monomial order. Each generator
// has cohomological degree 2.
class TruncatedPolyRing {
 public:
  explicit TruncatedPolyRing(std::vector<unsigned> caps);

  std::size_t size() const { return size_; }
  const std::vector<unsigned>& caps() const { return caps_; }

  using Elem = std::vector<Integer>;
  Elem zero() const { return Elem(size_, Integer(0)); }
  Elem constant(const Integer& c) const;
  Elem generator(unsigned var) const;

  Elem mul(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, unsigned n) const;
  // multiplicative inverse of an element with constant term 1 (geometric
  // series; terminates by truncation)
  Elem inverse_of_unit(const Elem& x) const;
  // part of total monomial degree d (sum of exponents = d)
  Elem degree_part(const Elem& x, unsigned d) const;
  Integer top_coefficient(const Elem& x) const;  // coeff of prod a_i^{cap_i}

 private:
  std::vector<unsigned> caps_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
  std::vector<unsigned> degree_;  // total degree per monomial index
};

// A closed-manifold model: the truncated cohomology ring, the total
// Pontryagin class and the fundamental pairing. For hypersurfaces the ring
// is the ambient one and pairings multiply by the hyperplane class first.
class ManifoldModel {
 public:
  static ManifoldModel point();
  static ManifoldModel cp(unsigned n);                       // CP^n, dim 2n
  static ManifoldModel hypersurface(unsigned m, unsigned n); // H_{m,n}, dim 2(m+n-1)

  unsigned dim() const { return dim_; }
  const std::string& name() const { return name_; }

  // <alpha, fundamental class> for a ring element of matching degree
  Integer pair(const TruncatedPolyRing::Elem& alpha) const;
  // degree-4i component of the total Pontryagin class
  TruncatedPolyRing::Elem pontryagin_class(unsigned i) const;

  // <p_I, [M]>; requires 4 |I| == dim
  Integer pontryagin_number(const Partition& I) const;
  // power-sum characteristic number s_{dim/4}; requires dim % 4 == 0
  Integer s_number() const;
  // <L_{dim/4}, [M]>, the signature by the Hirzebruch theorem
  Rational l_genus_pairing() const;

  bool operator==(const ManifoldModel& o) const;

  friend ManifoldModel product(const ManifoldModel& m1, const ManifoldModel& m2);

 private:
  ManifoldModel(TruncatedPolyRing ring, TruncatedPolyRing::Elem total_pontryagin,
                TruncatedPolyRing::Elem pairing_weight, unsigned dim,
                std::string name);
  Rational char_number(const GradedSymFunc& cls) const;

  TruncatedPolyRing ring_;
  TruncatedPolyRing::Elem total_pontryagin_;
  TruncatedPolyRing::Elem pairing_weight_;  // 1, or the hyperplane class
  unsigned dim_;
  std::string name_;
};

ManifoldModel product(const ManifoldModel& m1, const ManifoldModel& m2);

// Integer combination of equal-dimension models.
struct ManifoldCombo {
  std::vector<std::pair<Integer, ManifoldModel>> terms;

  unsigned dim() const;
  Integer pontryagin_number(const Partition& I) const;
  Integer s_number() const;
  Rational l_genus_pairing() const;
};

// HNF of the span of the models' Pontryagin-number vectors, coordinates
// indexed by the partitions of k in increasing order ((1,1) then (2) for
// k = 2, matching the (X, Y) convention). Only k = 2 is supported: higher k
// has more than two Pontryagin numbers, and assembling full generator sets
// there is out of scope.
LatticeBasis generator_lattice(const std::vector<ManifoldModel>& models, unsigned k);

}  // namespace ratplane
