#include <doctest.h>

#include "ratplane/char_classes.hpp"
#include "ratplane/paper_data.hpp"

using namespace ratplane;

namespace {
Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("s_top values") {
  CHECK(s_top(1) == make_rational(1, 3));
  CHECK(s_top(6) == parse_rational("2828954/638512875"));
  CHECK(s_top(8) == parse_rational("118518239/162820783125"));
  for (unsigned k = 1; k <= 16; ++k) CHECK(s_top(k) > 0);
}

TEST_CASE("s_half_pair values") {
  CHECK(s_half_pair(8) == parse_rational("-444721/162820783125"));
  CHECK(s_half_pair(4) == parse_rational("-19/14175"));
  CHECK(s_half_pair(6) == parse_rational("-40247/638512875"));
  CHECK(Rational(2 * s_half_pair(6)) == s_top(3) * s_top(3) - s_top(6));
  CHECK_THROWS_AS(s_half_pair(3), std::invalid_argument);
}

TEST_CASE("l_class low truncations") {
  GradedSymFunc expected(1);
  expected.add_term(Partition(), 1);
  expected.add_term(P({1}), make_rational(1, 3));
  CHECK(l_class(1) == expected);

  GradedSymFunc expected2(2);
  expected2.add_term(Partition(), 1);
  expected2.add_term(P({1}), make_rational(1, 3));
  expected2.add_term(P({2}), make_rational(7, 45));
  expected2.add_term(P({1, 1}), make_rational(-1, 45));
  CHECK(l_class(2) == expected2);

  CHECK(l_class(8).coefficient(P({8})) == parse_rational("118518239/162820783125"));
}

TEST_CASE("dual route: series coefficients equal the closed forms up to k = 12") {
  for (unsigned k = 1; k <= 12; ++k) {
    const auto l = l_class(k);
    CHECK(l.coefficient(Partition::single(k)) == s_top(k));
    if (k % 2 == 0)
      CHECK(l.coefficient(P({k / 2, k / 2})) == s_half_pair(k));
  }
}

TEST_CASE("hattori_stong_class leading term and weight bound") {
  CHECK(hattori_stong_class(1, 1) == GradedSymFunc::monomial(1, P({1})));
  for (unsigned i = 1; i <= 8; ++i) {
    const auto e = hattori_stong_class(i, 8);
    CHECK(e.coefficient(Partition::single(i)) == 1);
    for (const auto& [lambda, c] : e.coefficients()) CHECK(lambda.weight() >= i);
  }
}

TEST_CASE("restricted e_2 at k = 4 matches the worked example") {
  const auto r = restrict_to_plane(hattori_stong_class(2, 4), 4);
  CHECK(r.coefficient(1, 0) == 1);
  CHECK(r.coefficient(2, 0) == make_rational(1, 720));
  CHECK(r.coefficient(0, 1) == make_rational(1, 40));
}

TEST_CASE("restricted e_i at k = 8") {
  const auto e1 = restrict_to_plane(hattori_stong_class(1, 8), 8);
  CHECK(e1.coefficient(1, 0) == parse_rational("-1/5040"));
  CHECK(e1.coefficient(2, 0) == parse_rational("1/2615348736000"));
  CHECK(e1.coefficient(0, 1) == parse_rational("-1/1307674368000"));

  const auto e5 = restrict_to_plane(hattori_stong_class(5, 8), 8);
  CHECK(e5.coefficient(0, 1) == parse_rational("-43/2520"));
  CHECK(e5.coefficient(2, 0) == 0);

  const auto e8 = restrict_to_plane(hattori_stong_class(8, 8), 8);
  CHECK(e8.coefficient(0, 1) == 1);
  CHECK(e8.coefficient(2, 0) == 0);
}

TEST_CASE("restriction is a ring map killing the other p_i") {
  const auto f = GradedSymFunc::monomial(8, P({1}));
  CHECK(restrict_to_plane(f, 8).coefficients().empty());
  CHECK_THROWS_AS(restrict_to_plane(l_class(8), 7), std::invalid_argument);

  const auto l8 = restrict_to_plane(l_class(8), 8);
  CHECK(l8.coefficient(2, 0) == parse_rational("-444721/162820783125"));
  CHECK(l8.coefficient(0, 1) == parse_rational("118518239/162820783125"));
}

TEST_CASE("integrality rows at k = 8: spot values") {
  const auto rows = integrality_rows(8);
  CHECK(rows.size() == 67);  // partitions of weight <= 8
  CHECK(rows.front().lambda == Partition());

  auto row = [&rows](const Partition& lambda) {
    for (const auto& r : rows)
      if (r.lambda == lambda) return r;
    throw std::logic_error("row not found");
  };
  CHECK(row(P({4, 4})).c_sq == 1);
  CHECK(row(P({4, 4})).c_top == 0);
  CHECK(row(P({1, 1})).c_sq == parse_rational("1/25401600"));
  CHECK(row(P({1, 1})).c_top == 0);
  CHECK(row(P({7})).c_sq == 0);
  CHECK(row(P({7})).c_top == parse_rational("-2/3"));
  CHECK(row(Partition()).c_sq == parse_rational("-444721/162820783125"));
  CHECK(row(Partition()).c_top == parse_rational("118518239/162820783125"));
}

TEST_CASE("weight-k rows equal the restricted e-monomial alone") {
  const auto rows = integrality_rows(4);
  for (const auto& r : rows) {
    if (r.lambda.weight() != 4) continue;
    GradedSymFunc mono = GradedSymFunc::one(4);
    for (unsigned part : r.lambda.parts())
      mono = multiply(mono, hattori_stong_class(part, 4));
    const auto res = restrict_to_plane(mono, 4);
    CHECK(r.c_sq == res.coefficient(2, 0));
    CHECK(r.c_top == res.coefficient(0, 1));
  }
}

TEST_CASE("integrality rows are deterministic") {
  const auto a = integrality_rows(4);
  const auto b = integrality_rows(4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lambda == b[i].lambda);
    CHECK(a[i].c_sq == b[i].c_sq);
    CHECK(a[i].c_top == b[i].c_top);
  }
  CHECK_THROWS_AS(integrality_rows(3), std::invalid_argument);
}

TEST_CASE("reference diff: the published table disagrees only on e_1..e_4 rows") {
  const auto errata = errata_against_reference(8);
  CHECK(!errata.empty());
  for (const auto& cell : errata) {
    const bool affected = cell.row == "L" || cell.row == "1" || cell.row == "2" ||
                          cell.row == "3" || cell.row == "4";
    CHECK_MESSAGE(affected, "unexpected errata row ", cell.row);
    CHECK(cell.published != cell.recomputed);
  }
  // every published row that is immune to the L-coefficient discrepancy matches
  const auto rows = integrality_rows(8);
  for (const auto& pub : reference_dim32_table()) {
    if (pub.lambda.parts().size() == 1 && pub.lambda.weight() <= 4) continue;
    if (pub.lambda.empty()) {
      // the 1.L row depends only on L_8, also immune
    }
    for (const auto& r : rows) {
      if (!(r.lambda == pub.lambda)) continue;
      if (pub.lambda.parts().size() != 1 || pub.lambda.weight() >= 5) {
        CHECK(r.c_sq == pub.c_sq);
        CHECK(r.c_top == pub.c_top);
      }
    }
  }
}
