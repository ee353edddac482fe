// L-genus coefficients, Hattori-Stong classes e_i, restriction to the
// projective-plane situation (only p_{k/2} and p_k nonzero), and the
// degree-4k integrality row table Z[e].L.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ratplane/symmetric_algebra.hpp"

namespace ratplane {

// Characteristic power series of the L-genus in t = x^2:
// sqrt(t)/tanh(sqrt(t)) = sum_m 4^m B_{2m}/(2m)! t^m.
Series l_genus_series(unsigned order);

// Series of e^x + e^{-x} - 2 in t = x^2: sum_{m>=1} 2/(2m)! t^m.
Series hattori_series(unsigned order);

// Coefficient of p_k in L_k, computed from the closed form
// 2^{2k} (2^{2k-1} - 1) |B_{2k}| / (2k)!. Always positive.
Rational s_top(unsigned k);

// Coefficient of p_{k/2}^2 in L_k: (s_{k/2}^2 - s_k) / 2. Requires k even.
Rational s_half_pair(unsigned k);

// Total L-class truncated at weight k, assembled from the multiplicative
// series (an independent route from the closed forms above). Memoized.
GradedSymFunc l_class(unsigned k);

// e_i = sigma_i(e^{x_1}+e^{-x_1}-2, ...), truncated by weight. Memoized per
// (i, truncation); requires 1 <= i <= truncation.
GradedSymFunc hattori_stong_class(unsigned i, unsigned truncation);

// Polynomial in the two surviving classes p_{k/2} and p_k; coefficients are
// keyed by the exponent pair (a, b) meaning p_{k/2}^a p_k^b.
class RestrictedClass {
 public:
  explicit RestrictedClass(unsigned k) : k_(k) {}
  unsigned k() const { return k_; }
  const std::map<std::pair<unsigned, unsigned>, Rational>& coefficients() const {
    return coeffs_;
  }
  Rational coefficient(unsigned a, unsigned b) const;
  void add_term(unsigned a, unsigned b, const Rational& c);

 private:
  unsigned k_;
  std::map<std::pair<unsigned, unsigned>, Rational> coeffs_;
};

// Ring-homomorphic substitution p_i -> 0 for i not in {k/2, k}. Requires k
// even (odd k has a single surviving class and goes through the odd-k
// obstruction test instead) and truncation(f) >= k.
RestrictedClass restrict_to_plane(const GradedSymFunc& f, unsigned k);

// One row of the degree-4k integrality table: the degree-4k part of the
// restricted e_lambda . L, expressed on p_{k/2}^2 and p_k.
struct IntegralityRow {
  Partition lambda;
  Rational c_sq;   // coefficient of p_{k/2}^2
  Rational c_top;  // coefficient of p_k
};

// One row per partition lambda with |lambda| <= k, empty partition first
// (the 1.L row); rows that vanish identically after restriction are kept
// with zeros for audit purposes. Requires k even, k >= 2.
std::vector<IntegralityRow> integrality_rows(unsigned k);

}  // namespace ratplane
