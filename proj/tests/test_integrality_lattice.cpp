#include <doctest.h>

#include <random>

#include "ratplane/integrality_lattice.hpp"

using namespace ratplane;

TEST_CASE("row_to_congruence examples") {
  const auto c1 = row_to_congruence(parse_rational("-1/48"), parse_rational("1/40"));
  CHECK(c1.modulus == 15);
  CHECK(c1.u == -5);
  CHECK(c1.v == 6);

  const auto c2 = row_to_congruence(Rational(0), parse_rational("-43/2520"));
  CHECK(c2.modulus == 315);
  CHECK(c2.u == 0);
  CHECK(c2.v == 1);

  const auto c3 = row_to_congruence(Rational(1), Rational(0));
  CHECK(c3.vacuous());
}

TEST_CASE("canonical congruences") {
  // gcd(u, v, m) divides out
  const auto c = Congruence::canonical(Integer(45), Integer(6), Integer(3));
  CHECK(c.modulus == 15);
  CHECK(c.u == 2);
  CHECK(c.v == 1);
  // single-variable conditions scale to unit coefficient
  const auto d = Congruence::canonical(Integer(315), Integer(0), Integer(272));
  CHECK(d.u == 0);
  CHECK(d.v == 1);
  // sign rule: v > 0
  const auto e = Congruence::canonical(Integer(15), Integer(5), Integer(-6));
  CHECK(e.v > 0);
  CHECK(e.holds(3, 8) == Congruence{Integer(15), Integer(5), Integer(-6)}.holds(3, 8));
  // canonicalization is idempotent
  const auto again = Congruence::canonical(e.modulus, e.u, e.v);
  CHECK(again == e);
}

TEST_CASE("build_system at k = 8 contains the expected conditions") {
  const auto sys = build_system(integrality_rows(8));
  auto has = [&sys](const char* m, const char* u, const char* v) {
    const Congruence want{parse_integer(m), parse_integer(u), parse_integer(v)};
    for (const auto& c : sys)
      if (c == want) return true;
    return false;
  };
  CHECK(has("99225", "1", "0"));
  CHECK(has("315", "0", "1"));
  CHECK(has("162820783125", "-444721", "118518239"));
  for (const auto& c : sys) CHECK(odd_part(c.modulus) == c.modulus);
  CHECK(build_system({}).empty());
}

TEST_CASE("build_system is idempotent under re-canonicalization") {
  const auto sys = build_system(integrality_rows(8));
  for (const auto& c : sys)
    CHECK(Congruence::canonical(c.modulus, c.u, c.v) == c);
}

TEST_CASE("lattice_hnf worked examples") {
  const std::vector<Congruence> sys = {
      Congruence::canonical(Integer(5), Integer(1), Integer(-2)),
      Congruence::canonical(Integer(9), Integer(2), Integer(-5)),
  };
  const auto basis = lattice_hnf(sys);
  REQUIRE(basis.rank == 2);
  CHECK(basis.row0 == std::array<Integer, 2>{Integer(1), Integer(13)});
  CHECK(basis.row1 == std::array<Integer, 2>{Integer(0), Integer(45)});
  CHECK(basis.index() == Integer(45));
  CHECK(basis.contains(18, 9));
  CHECK(basis.contains(25, 10));
  CHECK_FALSE(basis.contains(1, 0));

  const auto id = lattice_hnf({});
  CHECK(id.index() == Integer(1));

  const auto single = lattice_hnf({Congruence::canonical(Integer(315), Integer(0), Integer(1))});
  CHECK(single.row0 == std::array<Integer, 2>{Integer(1), Integer(0)});
  CHECK(single.row1 == std::array<Integer, 2>{Integer(0), Integer(315)});
  CHECK(single.index() == Integer(315));
}

TEST_CASE("hnf_of_rows handles degenerate ranks") {
  const auto r1 = hnf_of_rows({{Integer(25), Integer(10)}});
  CHECK(r1.rank == 1);
  CHECK(r1.row0 == std::array<Integer, 2>{Integer(25), Integer(10)});
  CHECK_FALSE(r1.index().has_value());
  CHECK(r1.contains(50, 20));
  CHECK_FALSE(r1.contains(50, 21));

  const auto r0 = hnf_of_rows({});
  CHECK(r0.rank == 0);
  CHECK(r0.contains(0, 0));
  CHECK_FALSE(r0.contains(1, 0));

  const auto span = hnf_of_rows({{Integer(18), Integer(9)}, {Integer(25), Integer(10)}});
  REQUIRE(span.rank == 2);
  CHECK(span.row0 == std::array<Integer, 2>{Integer(1), Integer(13)});
  CHECK(span.row1 == std::array<Integer, 2>{Integer(0), Integer(45)});
}

TEST_CASE("membership in the HNF lattice matches raw congruence satisfaction") {
  std::mt19937_64 rng(31);
  const std::vector<std::vector<Congruence>> systems = {
      build_system(integrality_rows(2)),
      build_system(integrality_rows(4)),
      {Congruence::canonical(Integer(5), Integer(1), Integer(-2)),
       Congruence::canonical(Integer(9), Integer(2), Integer(-5))},
      {Congruence::canonical(Integer(315), Integer(0), Integer(1))},
  };
  for (const auto& sys : systems) {
    const auto basis = lattice_hnf(sys);
    for (int i = 0; i < 1000; ++i) {
      const Integer x(static_cast<long>(rng() % 200001) - 100000);
      const Integer y(static_cast<long>(rng() % 200001) - 100000);
      bool raw = true;
      for (const auto& c : sys) raw = raw && c.holds(x, y);
      CHECK(raw == basis.contains(x, y));
    }
  }
}
