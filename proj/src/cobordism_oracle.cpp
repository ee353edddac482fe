#include "ratplane/cobordism_oracle.hpp"

#include <algorithm>

#include "ratplane/char_classes.hpp"

namespace ratplane {

TruncatedPolyRing::TruncatedPolyRing(std::vector<unsigned> caps)
    : caps_(std::move(caps)) {
  strides_.resize(caps_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    strides_[i] = size_;
    size_ *= caps_[i] + 1;
  }
  degree_.assign(size_, 0);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    std::size_t rest = idx;
    unsigned d = 0;
    for (std::size_t i = 0; i < caps_.size(); ++i) {
      d += rest % (caps_[i] + 1);
      rest /= caps_[i] + 1;
    }
    degree_[idx] = d;
  }
}

TruncatedPolyRing::Elem TruncatedPolyRing::constant(const Integer& c) const {
  Elem e = zero();
  e[0] = c;
  return e;
}

TruncatedPolyRing::Elem TruncatedPolyRing::generator(unsigned var) const {
  Elem e = zero();
  e[strides_[var]] = 1;
  return e;
}

TruncatedPolyRing::Elem TruncatedPolyRing::mul(const Elem& x, const Elem& y) const {
  Elem r = zero();
  for (std::size_t i = 0; i < size_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < size_; ++j) {
      if (y[j] == 0) continue;
      // exponent-wise sum; drop when any variable exceeds its cap
      std::size_t ri = i, rj = j, idx = 0;
      bool ok = true;
      for (std::size_t v = 0; v < caps_.size(); ++v) {
        const unsigned base = caps_[v] + 1;
        const unsigned ev = ri % base + rj % base;
        if (ev > caps_[v]) {
          ok = false;
          break;
        }
        idx += ev * strides_[v];
        ri /= base;
        rj /= base;
      }
      if (ok) r[idx] += x[i] * y[j];
    }
  }
  return r;
}

TruncatedPolyRing::Elem TruncatedPolyRing::pow(const Elem& x, unsigned n) const {
  Elem r = constant(1);
  for (unsigned i = 0; i < n; ++i) r = mul(r, x);
  return r;
}

TruncatedPolyRing::Elem TruncatedPolyRing::inverse_of_unit(const Elem& x) const {
  if (x[0] != 1) throw std::invalid_argument("inverse requires constant term 1");
  Elem nil = x;  // x - 1, nilpotent
  nil[0] = 0;
  Elem r = constant(1);
  Elem power = constant(1);
  const unsigned max_degree = *std::max_element(degree_.begin(), degree_.end());
  for (unsigned i = 1; i <= max_degree; ++i) {
    power = mul(power, nil);
    const int sign = i % 2 == 0 ? 1 : -1;
    bool any = false;
    for (std::size_t j = 0; j < size_; ++j) {
      if (power[j] == 0) continue;
      r[j] += sign > 0 ? power[j] : Integer(-power[j]);
      any = true;
    }
    if (!any) break;
  }
  return r;
}

TruncatedPolyRing::Elem TruncatedPolyRing::degree_part(const Elem& x, unsigned d) const {
  Elem r = zero();
  for (std::size_t i = 0; i < size_; ++i)
    if (degree_[i] == d) r[i] = x[i];
  return r;
}

Integer TruncatedPolyRing::top_coefficient(const Elem& x) const {
  return x[size_ - 1];
}

ManifoldModel::ManifoldModel(TruncatedPolyRing ring,
                             TruncatedPolyRing::Elem total_pontryagin,
                             TruncatedPolyRing::Elem pairing_weight, unsigned dim,
                             std::string name)
    : ring_(std::move(ring)),
      total_pontryagin_(std::move(total_pontryagin)),
      pairing_weight_(std::move(pairing_weight)),
      dim_(dim),
      name_(std::move(name)) {}

ManifoldModel ManifoldModel::point() {
  TruncatedPolyRing ring{std::vector<unsigned>{}};
  return ManifoldModel(ring, ring.constant(1), ring.constant(1), 0, "pt");
}

ManifoldModel ManifoldModel::cp(unsigned n) {
  if (n < 1) throw std::invalid_argument("cp requires n >= 1");
  TruncatedPolyRing ring{std::vector<unsigned>{n}};
  // p(CP^n) = (1 + a^2)^{n+1}
  const auto a2 = ring.pow(ring.generator(0), 2);
  auto one_plus = a2;
  one_plus[0] += 1;
  return ManifoldModel(ring, ring.pow(one_plus, n + 1), ring.constant(1), 2 * n,
                       "CP^" + std::to_string(n));
}

ManifoldModel ManifoldModel::hypersurface(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw std::invalid_argument("hypersurface requires m, n >= 1");
  TruncatedPolyRing ring{std::vector<unsigned>{m, n}};
  const auto a = ring.generator(0);
  const auto b = ring.generator(1);
  // hyperplane class of the degree-(1,1) bundle
  auto h = a;
  for (std::size_t i = 0; i < h.size(); ++i) h[i] += b[i];

  auto binom = [&ring](const TruncatedPolyRing::Elem& x, unsigned e) {
    auto sq = ring.pow(x, 2);
    sq[0] += 1;
    return ring.pow(sq, e);
  };
  // Whitney quotient: p(H) (1 + h^2) = p(CP^m x CP^n) restricted to H
  const auto ambient = ring.mul(binom(a, m + 1), binom(b, n + 1));
  auto h2 = ring.pow(h, 2);
  h2[0] += 1;
  const auto total = ring.mul(ambient, ring.inverse_of_unit(h2));
  return ManifoldModel(ring, total, h, 2 * (m + n - 1),
                       "H_{" + std::to_string(m) + "," + std::to_string(n) + "}");
}

ManifoldModel product(const ManifoldModel& m1, const ManifoldModel& m2) {
  std::vector<unsigned> caps = m1.ring_.caps();
  caps.insert(caps.end(), m2.ring_.caps().begin(), m2.ring_.caps().end());
  TruncatedPolyRing ring{std::move(caps)};

  // strides of the combined ring, for direct index arithmetic
  std::vector<std::size_t> strides(ring.caps().size());
  std::size_t acc = 1;
  for (std::size_t v = 0; v < ring.caps().size(); ++v) {
    strides[v] = acc;
    acc *= ring.caps()[v] + 1;
  }
  const std::size_t shift = m1.ring_.caps().size();
  auto embed = [&ring, &strides](const TruncatedPolyRing& src,
                                 const TruncatedPolyRing::Elem& x,
                                 std::size_t var_offset) {
    TruncatedPolyRing::Elem out = ring.zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      std::size_t rest = i, idx = 0;
      for (std::size_t v = 0; v < src.caps().size(); ++v) {
        idx += (rest % (src.caps()[v] + 1)) * strides[v + var_offset];
        rest /= src.caps()[v] + 1;
      }
      out[idx] = x[i];
    }
    return out;
  };

  const auto p1 = embed(m1.ring_, m1.total_pontryagin_, 0);
  const auto p2 = embed(m2.ring_, m2.total_pontryagin_, shift);
  const auto w1 = embed(m1.ring_, m1.pairing_weight_, 0);
  const auto w2 = embed(m2.ring_, m2.pairing_weight_, shift);
  std::string name = m1.dim() == 0 ? m2.name()
                     : m2.dim() == 0 ? m1.name()
                                     : m1.name() + " x " + m2.name();
  return ManifoldModel(ring, ring.mul(p1, p2), ring.mul(w1, w2),
                       m1.dim() + m2.dim(), std::move(name));
}

Integer ManifoldModel::pair(const TruncatedPolyRing::Elem& alpha) const {
  return ring_.top_coefficient(ring_.mul(alpha, pairing_weight_));
}

TruncatedPolyRing::Elem ManifoldModel::pontryagin_class(unsigned i) const {
  return ring_.degree_part(total_pontryagin_, 2 * i);
}

Integer ManifoldModel::pontryagin_number(const Partition& I) const {
  if (4 * I.weight() != dim_)
    throw std::invalid_argument("partition weight does not match dimension of " + name_);
  auto prod = ring_.constant(1);
  for (unsigned part : I.parts()) prod = ring_.mul(prod, pontryagin_class(part));
  return pair(prod);
}

Rational ManifoldModel::char_number(const GradedSymFunc& cls) const {
  const unsigned k = dim_ / 4;
  Rational acc(0);
  for (const auto& [lambda, coeff] : cls.coefficients()) {
    if (lambda.weight() != k) continue;
    acc += coeff * Rational(pontryagin_number(lambda));
  }
  return acc;
}

Integer ManifoldModel::s_number() const {
  if (dim_ % 4 != 0)
    throw std::invalid_argument("s-number requires dimension divisible by 4");
  const unsigned k = dim_ / 4;
  const Rational v = char_number(powersum_to_pbasis(k, k));
  if (v.get_den() != 1) throw std::logic_error("s-number came out non-integral");
  return v.get_num();
}

Rational ManifoldModel::l_genus_pairing() const {
  if (dim_ % 4 != 0)
    throw std::invalid_argument("L-pairing requires dimension divisible by 4");
  return char_number(l_class(dim_ / 4));
}

bool ManifoldModel::operator==(const ManifoldModel& o) const {
  return ring_.caps() == o.ring_.caps() && total_pontryagin_ == o.total_pontryagin_ &&
         pairing_weight_ == o.pairing_weight_ && dim_ == o.dim_;
}

unsigned ManifoldCombo::dim() const {
  if (terms.empty()) throw std::invalid_argument("empty combination");
  const unsigned d = terms.front().second.dim();
  for (const auto& [c, m] : terms)
    if (m.dim() != d) throw std::invalid_argument("mixed dimensions in combination");
  return d;
}

Integer ManifoldCombo::pontryagin_number(const Partition& I) const {
  dim();
  Integer acc(0);
  for (const auto& [c, m] : terms) acc += c * m.pontryagin_number(I);
  return acc;
}

Integer ManifoldCombo::s_number() const {
  dim();
  Integer acc(0);
  for (const auto& [c, m] : terms) acc += c * m.s_number();
  return acc;
}

Rational ManifoldCombo::l_genus_pairing() const {
  dim();
  Rational acc(0);
  for (const auto& [c, m] : terms) acc += Rational(c) * m.l_genus_pairing();
  return acc;
}

LatticeBasis generator_lattice(const std::vector<ManifoldModel>& models, unsigned k) {
  if (k != 2)
    throw std::invalid_argument(
        "generator_lattice is supported for k = 2 only; higher k has more than "
        "two Pontryagin numbers");
  std::vector<std::array<Integer, 2>> rows;
  for (const ManifoldModel& m : models) {
    if (m.dim() != 4 * k)
      throw std::invalid_argument("model " + m.name() + " has dimension " +
                                  std::to_string(m.dim()) + ", expected " +
                                  std::to_string(4 * k));
    rows.push_back({m.pontryagin_number(Partition({1, 1})),
                    m.pontryagin_number(Partition::single(2))});
  }
  return hnf_of_rows(std::move(rows));
}

}  // namespace ratplane
