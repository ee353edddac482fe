#include "ratplane/symmetric_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace ratplane {

Series series_mul(const Series& a, const Series& b, unsigned max_deg) {
  Series r(std::min<size_t>(max_deg + 1, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1),
           Rational(0));
  for (size_t i = 0; i < a.size() && i <= max_deg; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j <= max_deg; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series series_log(const Series& g, unsigned max_deg) {
  if (g.empty() || g[0] != 1)
    throw std::invalid_argument("series_log requires constant term 1");
  Series c(max_deg + 1, Rational(0));
  auto coeff = [&g](size_t i) { return i < g.size() ? g[i] : Rational(0); };
  for (unsigned m = 1; m <= max_deg; ++m) {
    Rational acc = coeff(m);
    for (unsigned j = 1; j < m; ++j)
      acc -= Rational(static_cast<long>(j)) / m * c[j] * coeff(m - j);
    c[m] = acc;
  }
  return c;
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_) {
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
    weight_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

Partition Partition::single(unsigned part) { return Partition({part}); }

Partition Partition::merged(const Partition& other) const {
  std::vector<unsigned> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(),
             other.parts_.end(), std::back_inserter(merged),
             std::greater<unsigned>());
  Partition r;
  r.parts_ = std::move(merged);
  r.weight_ = weight_ + other.weight_;
  return r;
}

std::string Partition::str() const {
  if (parts_.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(const std::string& s) {
  if (s.empty() || s == "()") return Partition();
  std::vector<unsigned> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    parts.push_back(static_cast<unsigned>(std::stoul(tok)));
  return Partition(std::move(parts));
}

namespace {

void gen_partitions(unsigned remaining, unsigned max_part,
                    std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of_weight(unsigned w) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  gen_partitions(w, w == 0 ? 1 : w, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to_weight(unsigned max_w) {
  std::vector<Partition> out;
  for (unsigned w = 0; w <= max_w; ++w) {
    auto pw = partitions_of_weight(w);
    out.insert(out.end(), pw.begin(), pw.end());
  }
  return out;
}

GradedSymFunc GradedSymFunc::one(unsigned truncation) {
  return monomial(truncation, Partition());
}

GradedSymFunc GradedSymFunc::monomial(unsigned truncation, const Partition& p,
                                      const Rational& coeff) {
  GradedSymFunc f(truncation);
  f.add_term(p, coeff);
  return f;
}

Rational GradedSymFunc::coefficient(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GradedSymFunc::add_term(const Partition& p, const Rational& coeff) {
  if (p.weight() > truncation_ || coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void GradedSymFunc::check_same_truncation(const GradedSymFunc& o) const {
  if (truncation_ != o.truncation_)
    throw std::invalid_argument("truncation mismatch: " +
                                std::to_string(truncation_) + " vs " +
                                std::to_string(o.truncation_));
}

GradedSymFunc& GradedSymFunc::operator+=(const GradedSymFunc& o) {
  check_same_truncation(o);
  for (const auto& [p, c] : o.coeffs_) add_term(p, c);
  return *this;
}

GradedSymFunc& GradedSymFunc::operator-=(const GradedSymFunc& o) {
  check_same_truncation(o);
  for (const auto& [p, c] : o.coeffs_) add_term(p, -c);
  return *this;
}

GradedSymFunc& GradedSymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

GradedSymFunc operator+(GradedSymFunc a, const GradedSymFunc& b) { return a += b; }
GradedSymFunc operator-(GradedSymFunc a, const GradedSymFunc& b) { return a -= b; }
GradedSymFunc operator*(const Rational& c, GradedSymFunc f) { return f *= c; }

GradedSymFunc multiply(const GradedSymFunc& a, const GradedSymFunc& b) {
  a.check_same_truncation(b);
  GradedSymFunc r(a.truncation());
  for (const auto& [pa, ca] : a.coeffs_) {
    for (const auto& [pb, cb] : b.coeffs_) {
      if (pa.weight() + pb.weight() > a.truncation()) continue;
      r.add_term(pa.merged(pb), ca * cb);
    }
  }
  return r;
}

GradedSymFunc GradedSymFunc::graded_part(unsigned w) const {
  GradedSymFunc r(truncation_);
  for (const auto& [p, c] : coeffs_)
    if (p.weight() == w) r.add_term(p, c);
  return r;
}

std::string GradedSymFunc::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*p_(" + p.str() + ")";
  }
  return s;
}

namespace {

// Sparse homogeneous polynomials used for basis conversions; keys index
// monomials in either basis, products are multiset unions.
using SparsePoly = std::map<Partition, Rational>;

SparsePoly sparse_mul(const SparsePoly& a, const SparsePoly& b, unsigned max_w) {
  SparsePoly r;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      if (pa.weight() + pb.weight() > max_w) continue;
      Rational& slot = r[pa.merged(pb)];
      slot += ca * cb;
      if (slot == 0) r.erase(pa.merged(pb));
    }
  return r;
}

// psum_m in the p-basis, homogeneous of weight m:
//   psum_m = sum_{i=1..m-1} (-1)^(i-1) p_(i) psum_{m-i} + (-1)^(m-1) m p_(m)
const SparsePoly& powersum_in_pbasis(unsigned m) {
  static std::mutex mu;
  static std::vector<SparsePoly> cache;  // cache[m]
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back({{Partition(), Rational(1)}});  // unused psum_0 slot
  while (cache.size() <= m) {
    const unsigned n = static_cast<unsigned>(cache.size());
    SparsePoly acc;
    for (unsigned i = 1; i < n; ++i) {
      const int sgn = (i % 2 == 1) ? 1 : -1;
      for (const auto& [p, c] : cache[n - i]) {
        Partition key = p.merged(Partition::single(i));
        Rational& slot = acc[key];
        slot += Rational(sgn) * c;
        if (slot == 0) acc.erase(key);
      }
    }
    const int sgn = (n % 2 == 1) ? 1 : -1;
    Rational& slot = acc[Partition::single(n)];
    slot += Rational(sgn) * Rational(static_cast<long>(n));
    if (slot == 0) acc.erase(Partition::single(n));
    cache.push_back(std::move(acc));
  }
  return cache[m];
}

// p_(m) (the m-th elementary symmetric function of the t_j) in the
// power-sum monomial basis: m e_m = sum_{r=1..m} (-1)^(r-1) e_{m-r} psum_r.
const SparsePoly& generator_in_powersum_basis(unsigned m) {
  static std::mutex mu;
  static std::vector<SparsePoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back({{Partition(), Rational(1)}});  // e_0 = 1
  while (cache.size() <= m) {
    const unsigned n = static_cast<unsigned>(cache.size());
    SparsePoly acc;
    for (unsigned r = 1; r <= n; ++r) {
      const int sgn = (r % 2 == 1) ? 1 : -1;
      for (const auto& [p, c] : cache[n - r]) {
        Partition key = p.merged(Partition::single(r));
        Rational& slot = acc[key];
        slot += Rational(sgn) * c;
        if (slot == 0) acc.erase(key);
      }
    }
    for (auto& [p, c] : acc) c /= Rational(static_cast<long>(n));
    cache.push_back(std::move(acc));
  }
  return cache[m];
}

}  // namespace

GradedSymFunc powersum_to_pbasis(unsigned m, unsigned truncation) {
  if (m == 0 || m > truncation)
    throw std::invalid_argument("powersum_to_pbasis requires 1 <= m <= truncation");
  GradedSymFunc r(truncation);
  for (const auto& [p, c] : powersum_in_pbasis(m)) r.add_term(p, c);
  return r;
}

std::map<Partition, Rational> to_powersum_basis(const GradedSymFunc& f) {
  SparsePoly out;
  for (const auto& [lambda, c] : f.coefficients()) {
    SparsePoly term{{Partition(), c}};
    for (unsigned part : lambda.parts())
      term = sparse_mul(term, generator_in_powersum_basis(part), f.truncation());
    for (const auto& [p, v] : term) {
      Rational& slot = out[p];
      slot += v;
      if (slot == 0) out.erase(p);
    }
  }
  return out;
}

GradedSymFunc from_powersum_basis(const std::map<Partition, Rational>& coeffs,
                                  unsigned truncation) {
  GradedSymFunc out(truncation);
  for (const auto& [lambda, c] : coeffs) {
    if (lambda.weight() > truncation) continue;
    GradedSymFunc term = GradedSymFunc::monomial(truncation, Partition(), c);
    for (unsigned part : lambda.parts())
      term = multiply(term, powersum_to_pbasis(part, truncation));
    out += term;
  }
  return out;
}

GradedSymFunc from_multiplicative_series(const Series& g, unsigned truncation) {
  if (g.empty() || g[0] != 1)
    throw std::invalid_argument("multiplicative series requires g(0) = 1");
  const Series logg = series_log(g, truncation);
  // F = sum_j log g(t_j) = sum_m logg[m] psum_m
  GradedSymFunc f(truncation);
  for (unsigned m = 1; m <= truncation; ++m) {
    if (logg[m] == 0) continue;
    f += logg[m] * powersum_to_pbasis(m, truncation);
  }
  // exp(F), exact: F has no constant term so the sum terminates.
  GradedSymFunc result = GradedSymFunc::one(truncation);
  GradedSymFunc power = GradedSymFunc::one(truncation);
  for (unsigned r = 1; r <= truncation; ++r) {
    power = multiply(power, f);
    power *= Rational(1, static_cast<long>(r));
    if (power.coefficients().empty()) break;
    result += power;
  }
  return result;
}

GradedSymFunc elementary_of_series_values(const Series& phi, unsigned i,
                                          unsigned truncation) {
  if (!phi.empty() && phi[0] != 0)
    throw std::invalid_argument("elementary_of_series_values requires phi(0) = 0");
  if (i < 1 || i > truncation)
    throw std::invalid_argument("elementary_of_series_values requires 1 <= i <= truncation");

  // P_r = sum_j phi(t_j)^r, in the p-basis.
  std::vector<GradedSymFunc> psums;  // psums[r-1] = P_r
  Series phi_pow{Rational(1)};
  for (unsigned r = 1; r <= i; ++r) {
    phi_pow = series_mul(phi_pow, phi, truncation);
    GradedSymFunc pr(truncation);
    for (unsigned m = r; m <= truncation && m < phi_pow.size(); ++m) {
      if (phi_pow[m] == 0) continue;
      pr += phi_pow[m] * powersum_to_pbasis(m, truncation);
    }
    psums.push_back(std::move(pr));
  }

  // Newton: s sigma_s = sum_{r=1..s} (-1)^(r-1) sigma_{s-r} P_r
  std::vector<GradedSymFunc> sigma{GradedSymFunc::one(truncation)};
  for (unsigned s = 1; s <= i; ++s) {
    GradedSymFunc acc(truncation);
    for (unsigned r = 1; r <= s; ++r) {
      GradedSymFunc term = multiply(sigma[s - r], psums[r - 1]);
      if (r % 2 == 0) term *= Rational(-1);
      acc += term;
    }
    acc *= Rational(1, static_cast<long>(s));
    sigma.push_back(std::move(acc));
  }
  return sigma[i];
}

std::string to_json(const GradedSymFunc& f) {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, c] : f.coefficients()) {
    if (!first) s += ",";
    first = false;
    s += "\"" + p.str() + "\":\"" + to_string(c) + "\"";
  }
  return s + "}";
}

}  // namespace ratplane
