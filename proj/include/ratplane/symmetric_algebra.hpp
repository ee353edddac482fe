// Truncated symmetric-function algebra in the variables t_j = x_j^2, graded
// by weight (weight i corresponds to cohomological degree 4i). The canonical
// basis is the Pontryagin-monomial basis p_lambda, i.e. products of
// elementary symmetric functions of the t_j; there the product of basis
// monomials is just the multiset union of their index partitions.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratplane/exact_arith.hpp"

namespace ratplane {

// Formal power series in one variable with exact rational coefficients;
// index = exponent. Helpers truncate to a fixed maximum degree.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, unsigned max_deg);
Series series_log(const Series& g, unsigned max_deg);  // requires g[0] == 1

// Weakly decreasing list of positive parts; the empty partition indexes the
// constant monomial.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);
  static Partition single(unsigned part);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  Partition merged(const Partition& other) const;  // multiset union of parts

  // "4,4" for (4,4); "()" for the empty partition.
  std::string str() const;
  static Partition parse(const std::string& s);

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned weight_ = 0;
};

std::vector<Partition> partitions_of_weight(unsigned w);
std::vector<Partition> partitions_up_to_weight(unsigned max_w);

class GradedSymFunc {
 public:
  explicit GradedSymFunc(unsigned truncation) : truncation_(truncation) {}
  static GradedSymFunc one(unsigned truncation);
  static GradedSymFunc monomial(unsigned truncation, const Partition& p,
                                const Rational& coeff = Rational(1));

  unsigned truncation() const { return truncation_; }
  const std::map<Partition, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(const Partition& p) const;
  void add_term(const Partition& p, const Rational& coeff);  // drops weight > truncation

  GradedSymFunc& operator+=(const GradedSymFunc& o);
  GradedSymFunc& operator-=(const GradedSymFunc& o);
  GradedSymFunc& operator*=(const Rational& c);

  bool operator==(const GradedSymFunc& o) const = default;

  // Weight-w homogeneous component.
  GradedSymFunc graded_part(unsigned w) const;

  std::string str() const;  // human-readable, deterministic

 private:
  void check_same_truncation(const GradedSymFunc& o) const;
  unsigned truncation_;
  std::map<Partition, Rational> coeffs_;  // no zero entries

  friend GradedSymFunc multiply(const GradedSymFunc&, const GradedSymFunc&);
};

GradedSymFunc operator+(GradedSymFunc a, const GradedSymFunc& b);
GradedSymFunc operator-(GradedSymFunc a, const GradedSymFunc& b);
GradedSymFunc operator*(const Rational& c, GradedSymFunc f);

// Product in the Pontryagin-monomial basis, truncated to the shared weight
// bound; mixed truncations are an error, never an implicit re-truncation.
GradedSymFunc multiply(const GradedSymFunc& a, const GradedSymFunc& b);
inline GradedSymFunc operator*(const GradedSymFunc& a, const GradedSymFunc& b) {
  return multiply(a, b);
}

// Power sum sum_j t_j^m expressed in the p-basis via Newton's identities;
// homogeneous of weight m. Requires m <= truncation.
GradedSymFunc powersum_to_pbasis(unsigned m, unsigned truncation);

// Conversions to/from the power-sum monomial basis (keys index products of
// power sums). Round trips are exact.
std::map<Partition, Rational> to_powersum_basis(const GradedSymFunc& f);
GradedSymFunc from_powersum_basis(const std::map<Partition, Rational>& coeffs,
                                  unsigned truncation);

// prod_j g(t_j) for a series g with g(0) = 1, truncated by weight. Computed
// as exp(sum_j log g(t_j)) in the graded algebra.
GradedSymFunc from_multiplicative_series(const Series& g, unsigned truncation);

// i-th elementary symmetric function of the values {phi(t_j)}_j for a series
// phi with phi(0) = 0: power sums of the values are assembled first, then
// Newton's identities produce sigma_i. Requires 1 <= i <= truncation.
GradedSymFunc elementary_of_series_values(const Series& phi, unsigned i,
                                          unsigned truncation);

// JSON object text mapping partition strings to rational strings, keys in
// the canonical partition order.
std::string to_json(const GradedSymFunc& f);

}  // namespace ratplane
