#include "ratplane/char_classes.hpp"

#include <algorithm>
#include <mutex>

namespace ratplane {

Series l_genus_series(unsigned order) {
  Series g(order + 1, Rational(0));
  g[0] = 1;
  for (unsigned m = 1; m <= order; ++m) {
    Integer four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, m);
    g[m] = Rational(four_pow) * bernoulli(2 * m) / Rational(factorial(2 * m));
  }
  return g;
}

Series hattori_series(unsigned order) {
  Series phi(order + 1, Rational(0));
  for (unsigned m = 1; m <= order; ++m)
    phi[m] = Rational(2) / Rational(factorial(2 * m));
  return phi;
}

Rational s_top(unsigned k) {
  if (k < 1) throw std::invalid_argument("s_top requires k >= 1");
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
  Integer two_pow_h;
  mpz_ui_pow_ui(two_pow_h.get_mpz_t(), 2, 2 * k - 1);
  Rational b = bernoulli(2 * k);
  if (b < 0) b = -b;
  return Rational(two_pow) * Rational(two_pow_h - 1) * b / Rational(factorial(2 * k));
}

Rational s_half_pair(unsigned k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("s_half_pair requires even k >= 2");
  const Rational sh = s_top(k / 2);
  return (sh * sh - s_top(k)) / 2;
}

GradedSymFunc l_class(unsigned k) {
  if (k < 1) throw std::invalid_argument("l_class requires k >= 1");
  static std::mutex mu;
  static std::map<unsigned, GradedSymFunc> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end())
    it = cache.emplace(k, from_multiplicative_series(l_genus_series(k), k)).first;
  return it->second;
}

GradedSymFunc hattori_stong_class(unsigned i, unsigned truncation) {
  if (i < 1 || i > truncation)
    throw std::invalid_argument("hattori_stong_class requires 1 <= i <= truncation");
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, GradedSymFunc> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(i, truncation);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, elementary_of_series_values(hattori_series(truncation),
                                                        i, truncation)).first;
  return it->second;
}

Rational RestrictedClass::coefficient(unsigned a, unsigned b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void RestrictedClass::add_term(unsigned a, unsigned b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(std::make_pair(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

RestrictedClass restrict_to_plane(const GradedSymFunc& f, unsigned k) {
  if (k % 2 != 0 || k == 0)
    throw std::invalid_argument("restriction target requires even k (odd k has a single surviving class)");
  if (f.truncation() < k)
    throw std::invalid_argument("truncation below k");
  RestrictedClass r(k);
  const unsigned half = k / 2;
  for (const auto& [lambda, c] : f.coefficients()) {
    unsigned a = 0, b = 0;
    bool survives = true;
    for (unsigned part : lambda.parts()) {
      if (part == half)
        ++a;
      else if (part == k)
        ++b;
      else {
        survives = false;
        break;
      }
    }
    if (survives) r.add_term(a, b, c);
  }
  return r;
}

namespace {

bool row_order(const Partition& x, const Partition& y) {
  if (x.weight() != y.weight()) return x.weight() < y.weight();
  return y.parts() < x.parts();  // within a weight: largest parts first
}

}  // namespace

std::vector<IntegralityRow> integrality_rows(unsigned k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("integrality_rows requires even k >= 2");
  auto lambdas = partitions_up_to_weight(k);
  std::sort(lambdas.begin(), lambdas.end(), row_order);

  const GradedSymFunc l = l_class(k);
  std::vector<IntegralityRow> rows;
  rows.reserve(lambdas.size());
  for (const auto& lambda : lambdas) {
    GradedSymFunc e_monomial = GradedSymFunc::one(k);
    for (unsigned part : lambda.parts())
      e_monomial = multiply(e_monomial, hattori_stong_class(part, k));
    const RestrictedClass res = restrict_to_plane(multiply(e_monomial, l), k);
    rows.push_back({lambda, res.coefficient(2, 0), res.coefficient(0, 1)});
  }
  return rows;
}

}  // namespace ratplane
