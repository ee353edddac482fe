// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exits nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "ratplane/cobordism_oracle.hpp"
#include "ratplane/commands.hpp"
#include "ratplane/paper_data.hpp"
#include "ratplane/residue_scan.hpp"

using namespace ratplane;

namespace {

int g_failures = 0;

#define REQUIRE_C(cond)                                                     \
  do {                                                                      \
    if (!(cond)) {                                                          \
      throw std::runtime_error(std::string("requirement failed at ") +      \
                               __FILE__ + ":" + std::to_string(__LINE__) +  \
                               ": " #cond);                                 \
    }                                                                       \
  } while (0)

void criterion(int number, const std::string& name,
               const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream line;
  line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name
       << " (" << secs << "s)";
  if (!detail.empty()) line << " -- " << detail;
  std::cout << line.str() << "\n";
  if (!ok) ++g_failures;
}

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

}  // namespace

int main() {
  criterion(1, "coefficient regression", [] {
    REQUIRE_C(s_top(8) == parse_rational("118518239/162820783125"));
    REQUIRE_C(s_half_pair(8) == parse_rational("-444721/162820783125"));
    REQUIRE_C(abs(s_top(6)) == parse_rational("2828954/638512875"));
    REQUIRE_C(abs(s_half_pair(6)) == parse_rational("40247/638512875"));
    REQUIRE_C(s_half_pair(4) == parse_rational("-19/14175"));
    REQUIRE_C(s_top(4) == parse_rational("381/14175"));
    return std::string();
  });

  criterion(2, "dual-route L-class coefficients for k <= 12", [] {
    for (unsigned k = 1; k <= 12; ++k) {
      const auto l = l_class(k);
      REQUIRE_C(l.coefficient(Partition::single(k)) == s_top(k));
      if (k % 2 == 0)
        REQUIRE_C(l.coefficient(P({k / 2, k / 2})) == s_half_pair(k));
    }
    return std::string();
  });

  criterion(3, "e-class regression and errata diff", [] {
    const auto e2 = restrict_to_plane(hattori_stong_class(2, 4), 4);
    REQUIRE_C(e2.coefficient(1, 0) == 1);
    REQUIRE_C(e2.coefficient(2, 0) == parse_rational("1/720"));
    REQUIRE_C(e2.coefficient(0, 1) == parse_rational("1/40"));

    const auto e1 = restrict_to_plane(hattori_stong_class(1, 8), 8);
    REQUIRE_C(e1.coefficient(1, 0) == parse_rational("-1/5040"));
    REQUIRE_C(e1.coefficient(2, 0) == parse_rational("1/2615348736000"));
    REQUIRE_C(e1.coefficient(0, 1) == parse_rational("-1/1307674368000"));

    // rows immune to the published L-coefficient discrepancy match exactly:
    // the singletons e_5..e_8 and every multi-part e-monomial row
    const auto rows = integrality_rows(8);
    auto row = [&rows](const Partition& lambda) -> const IntegralityRow& {
      for (const auto& r : rows)
        if (r.lambda == lambda) return r;
      throw std::runtime_error("row missing: " + lambda.str());
    };
    for (const auto& pub : reference_dim32_table()) {
      const bool affected =
          pub.lambda.parts().size() == 1 && pub.lambda.weight() <= 4;
      if (affected) continue;
      const auto& mine = row(pub.lambda);
      REQUIRE_C(mine.c_sq == pub.c_sq);
      REQUIRE_C(mine.c_top == pub.c_top);
    }
    REQUIRE_C(row(P({1, 1})).c_sq == parse_rational("1/25401600"));
    REQUIRE_C(row(P({4, 4})).c_sq == 1);

    // rows e_1..e_4 are recomputed; the diff against the published table
    // must be nonempty
    const auto errata = errata_against_reference(8);
    REQUIRE_C(!errata.empty());
    bool l_entry = false;
    for (const auto& cell : errata) l_entry = l_entry || cell.row == "L";
    REQUIRE_C(l_entry);
    return std::to_string(errata.size()) + " errata cells";
  });

  criterion(4, "congruence extraction at k = 8", [] {
    const auto sys = build_system(integrality_rows(8));
    auto has = [&sys](const Congruence& want) {
      for (const auto& c : sys)
        if (c == want) return true;
      return false;
    };
    REQUIRE_C(has({parse_integer("99225"), Integer(1), Integer(0)}));
    REQUIRE_C(has({parse_integer("315"), Integer(0), Integer(1)}));
    REQUIRE_C(has({parse_integer("162820783125"), parse_integer("-444721"),
                   parse_integer("118518239")}));
    return std::string();
  });

  criterion(5, "dimension 24 is empty (with exhaustive scan)", [] {
    const auto v = decide(6);
    REQUIRE_C(v.status == Status::Empty);
    // independent full-period scan of the signature equation mod B = s_6's
    // numerator, both essential sign sectors
    const SignatureEquation eq = *v.equation;
    REQUIRE_C(eq.b_top == 2828954);
    const std::uint64_t b = eq.b_top.get_ui();
    for (int epsilon : {1, -1}) {
      const Integer c = epsilon > 0 ? eq.c_rhs : Integer(-eq.c_rhs);
      const scan::Condition cond{
          b, mod_floor(eq.a_sq, eq.b_top).get_ui(),
          mod_floor(-c, eq.b_top).get_ui()};
      const auto res =
          scan::scan_parallel(b, std::span<const scan::Condition>(&cond, 1));
      REQUIRE_C(res.hit_count == 0);
    }
    return std::string("no admissible x mod 2828954 in either sector");
  });

  criterion(6, "dimension 32 is solvable with verified certificates", [] {
    const auto v = decide(8);
    REQUIRE_C(v.status == Status::Solvable);
    Integer classes(0);
    for (const auto& s : v.sectors) classes += s.class_count();
    REQUIRE_C(classes > 0);
    REQUIRE_C(v.witness.has_value());
    const auto wrep = verify_solution(8, v.witness->x, v.witness->y,
                                      v.witness->sign_x, v.witness->epsilon);
    REQUIRE_C(wrep.residual == 0);
    REQUIRE_C(wrep.all_pass());
    for (const auto& w : enumerate_solutions(v, 3)) {
      const auto rep = verify_solution(8, w.x, w.y, w.sign_x, w.epsilon);
      REQUIRE_C(rep.residual == 0);
      REQUIRE_C(rep.all_pass());
    }

    // independent minimality confirmation: exhaust every x below the witness
    // against the raw conditions (omitting only the one condition whose
    // modulus exceeds 64 bits, which can only widen the candidate set)
    const SignatureEquation eq = *v.equation;
    REQUIRE_C(v.witness->x.fits_ulong_p());
    const std::uint64_t xmin = v.witness->x.get_ui();
    for (int eps : {1, -1}) {
      std::vector<scan::Condition> conds;
      const Integer c = eps > 0 ? eq.c_rhs : Integer(-eq.c_rhs);
      conds.push_back({eq.b_top.get_ui(), mod_floor(eq.a_sq, eq.b_top).get_ui(),
                       mod_floor(-c, eq.b_top).get_ui()});
      for (const auto& g : v.system) {
        const Integer q = eq.b_top * g.modulus;
        if (!q.fits_ulong_p()) continue;
        conds.push_back({q.get_ui(),
                         mod_floor(g.u * eq.b_top - g.v * eq.a_sq, q).get_ui(),
                         mod_floor(g.v * c, q).get_ui()});
      }
      REQUIRE_C(scan::scan_parallel(xmin, conds, 1).hit_count == 0);
    }

    // the published example pair satisfies the signature equation exactly
    // for some sign choice; report its status under the recomputed system
    const Integer px = reference_dim32_witness_x();
    const Integer py = reference_dim32_witness_y();
    std::string report = "published pair: ";
    bool eq_holds = false;
    for (int s : {1, -1})
      for (int e : {1, -1}) {
        const auto rep = verify_solution(8, px, py, s, e);
        if (rep.residual != 0) continue;
        eq_holds = true;
        unsigned pass = 0;
        for (const auto& chk : rep.recomputed) pass += chk.pass;
        report += "equation exact at (sign_x, eps) = (" + std::to_string(s) +
                  ", " + std::to_string(e) + "), recomputed congruences " +
                  std::to_string(pass) + "/" + std::to_string(rep.recomputed.size());
      }
    REQUIRE_C(eq_holds);
    return report + ", admissible classes " + to_string(classes) +
           ", minimal witness x = " + to_string(v.witness->x) +
           " confirmed by exhaustion";
  });

  criterion(7, "headline scan k = 1..8", [] {
    std::vector<Status> status(9, Status::Undecided);
    for (unsigned k = 1; k <= 8; ++k) status[k] = decide(k).status;
    for (unsigned k : {3u, 5u, 7u}) REQUIRE_C(status[k] == Status::OddKObstruction);
    REQUIRE_C(status[6] == Status::Empty);
    for (unsigned k : {2u, 4u, 8u}) REQUIRE_C(status[k] == Status::Solvable);
    unsigned smallest = 0;
    for (unsigned k = 5; k <= 8; ++k)
      if (status[k] == Status::Solvable) {
        smallest = k;
        break;
      }
    REQUIRE_C(smallest == 8);
    return std::string("smallest k>4 solvable: 8 (dimension 32)");
  });

  criterion(8, "odd-k numerator sweep", [] {
    for (unsigned k = 3; k <= 25; k += 2) {
      const auto r = odd_k_obstruction_test(k);
      REQUIRE_C(r.s_numerator != 1);
      REQUIRE_C(r.obstructed);
    }
    REQUIRE_C(odd_k_obstruction_test(1).s_numerator == 1);
    REQUIRE_C(!odd_k_obstruction_test(1).obstructed);
    return std::string();
  });

  criterion(9, "dimension-8 cross-validation", [] {
    const auto cp2sq = product(ManifoldModel::cp(2), ManifoldModel::cp(2));
    const auto cp4 = ManifoldModel::cp(4);
    REQUIRE_C(cp2sq.pontryagin_number(P({1, 1})) == 18);
    REQUIRE_C(cp2sq.pontryagin_number(P({2})) == 9);
    REQUIRE_C(cp4.pontryagin_number(P({1, 1})) == 25);
    REQUIRE_C(cp4.pontryagin_number(P({2})) == 10);

    const auto gen = generator_lattice({cp2sq, cp4}, 2);
    REQUIRE_C(gen.rank == 2);
    REQUIRE_C(gen.index() == Integer(45));
    const auto hs = lattice_hnf(build_system(integrality_rows(2)));
    REQUIRE_C(gen == hs);

    for (const auto& m : {cp2sq, cp4}) {
      const Integer x = m.pontryagin_number(P({1, 1}));
      const Integer y = m.pontryagin_number(P({2}));
      REQUIRE_C(mod_floor(x - 2 * y, Integer(5)) == 0);
      REQUIRE_C(mod_floor(2 * x - 5 * y, Integer(9)) == 0);
    }
    return std::string("both pipelines give the index-45 lattice");
  });

  criterion(10, "cobordism oracle characteristic numbers", [] {
    for (unsigned k = 1; k <= 7; ++k)
      REQUIRE_C(ManifoldModel::cp(2 * k).s_number() == Integer(2 * k + 1));
    ManifoldCombo dim16;
    dim16.terms.emplace_back(9, ManifoldModel::cp(8));
    dim16.terms.emplace_back(1, ManifoldModel::hypersurface(3, 6));
    REQUIRE_C(dim16.s_number() == -3);
    ManifoldCombo dim28;
    dim28.terms.emplace_back(-85, ManifoldModel::cp(14));
    dim28.terms.emplace_back(-16, ManifoldModel::hypersurface(3, 12));
    dim28.terms.emplace_back(2, ManifoldModel::hypersurface(5, 10));
    REQUIRE_C(dim28.s_number() == -1);
    for (unsigned k = 1; k <= 6; ++k)
      REQUIRE_C(ManifoldModel::cp(2 * k).l_genus_pairing() == 1);
    return std::string();
  });

  criterion(11, "solver soundness against brute force", [] {
    std::mt19937_64 rng(0);
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t m = rng() % 1'000'000 + 1;
      const std::uint64_t a = rng() % (2 * m) + (i % 5 == 0 ? 0 : 1);
      const std::uint64_t r = i % 7 == 0 ? 0 : rng() % m;
      const auto mine = solve_quadratic_congruence(
          Integer(static_cast<unsigned long>(a)),
          Integer(static_cast<unsigned long>(r)),
          Integer(static_cast<unsigned long>(m)));
      const scan::Condition cond{m, a % m, (m - r % m) % m};
      const auto brute =
          scan::scan_serial(m, std::span<const scan::Condition>(&cond, 1));
      REQUIRE_C(mine.count() ==
                Integer(static_cast<unsigned long>(brute.hit_count)));
      for (std::size_t j = 0; j < brute.hits.size(); j += 97)
        REQUIRE_C(mine.contains(Integer(static_cast<unsigned long>(brute.hits[j]))));
    }

    // verdict certificates re-verify from scratch
    for (unsigned k : {2u, 4u, 8u}) {
      const auto v = decide(k);
      REQUIRE_C(v.status == Status::Solvable);
      REQUIRE_C(verify_solution(k, v.witness->x, v.witness->y, v.witness->sign_x,
                                v.witness->epsilon)
                    .all_pass());
      for (const auto& s : v.sectors) {
        if (s.is_empty()) continue;
        // every member of the admissible class is a solution
        for (const auto& w : enumerate_solutions(v, 2))
          REQUIRE_C(verify_solution(k, w.x, w.y, w.sign_x, w.epsilon).all_pass());
        break;
      }
    }
    const auto v6 = decide(6);
    for (const auto& s : v6.sectors) {
      const auto o = s.obstruction();
      REQUIRE_C(o.has_value());
      REQUIRE_C(o->first.fits_ulong_p());
    }
    return std::string("200 random congruences + certificate re-verification");
  });

  if (g_failures == 0)
    std::cout << "acceptance: all criteria passed\n";
  else
    std::cout << "acceptance: " << g_failures << " criterion(s) FAILED\n";
  return g_failures == 0 ? 0 : 1;
}
