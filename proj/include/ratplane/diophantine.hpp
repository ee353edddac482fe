// Solvability of the signature equation A X + B Y = eps C together with the
// congruence lattice and the perfect-square/sign constraint X = sign_X x^2.
// Verdicts carry verifiable certificates: a witness plus admissible residue
// classes when solvable, a per-prime-power obstruction when empty.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratplane/integrality_lattice.hpp"

namespace ratplane {

// A X + B Y = eps C with A/C = s_{k/2,k/2}, B/C = s_k in lowest common
// terms; gcd(A, B, C) = 1 and C > 0.
struct SignatureEquation {
  Integer a_sq;   // A, coefficient of X = <p_{k/2}^2, mu>
  Integer b_top;  // B, coefficient of Y = <p_k, mu>
  Integer c_rhs;  // C, |right-hand side| after clearing denominators
};

SignatureEquation clear_denominators(const Rational& s_pair, const Rational& s_top);

// Solutions of a x^2 = r (mod p^e) for one prime power: every solution set
// that arises is a union of classes modulo a single divisor `stride` of
// p^e, so solutions are stored as sorted residues in [0, stride).
struct ResidueSet {
  Integer prime;        // 0 marks a composite block (brute-force fallback)
  unsigned exponent = 0;
  Integer prime_power;  // p^e, or the composite modulus for a fallback block
  Integer stride;       // divides prime_power
  std::vector<Integer> residues;  // sorted, in [0, stride)
  std::optional<std::string> obstruction;  // set when residues is empty

  bool empty() const { return residues.empty(); }
  Integer count() const;  // solutions mod prime_power
  bool contains(const Integer& x) const;
};

// Complete solution description of a x^2 = r (mod m), split per prime power
// of m and recombinable by CRT. An empty set is a valid result; the
// obstructing prime power is then identified.
struct QuadraticSolutions {
  Integer modulus;
  std::vector<ResidueSet> per_prime_power;

  bool empty() const;
  Integer count() const;  // number of solutions mod modulus
  bool contains(const Integer& x) const;
  // smallest member of each per-prime-power set combined by CRT; the
  // combined class has modulus lcm(strides)
  std::optional<Integer> representative() const;
};

// Solve for a single prime power; exposed for tests.
ResidueSet solve_quadratic_prime_power(const Integer& a, const Integer& r,
                                       const Integer& p, unsigned e);

QuadraticSolutions solve_quadratic_congruence(const Integer& a, const Integer& r,
                                              const Integer& m,
                                              const FactorConfig& cfg = {});

// Obstruction test for odd k: the numerator of s_k in lowest terms; any
// value other than 1 rules the dimension out.
struct OddKTestResult {
  Integer s_numerator;  // |numerator(s_k)|
  bool obstructed;      // s_numerator != 1
};
OddKTestResult odd_k_obstruction_test(unsigned k);

enum class Status { Solvable, Empty, OddKObstruction, Inconclusive, Undecided };
std::string status_name(Status s);

struct Witness {
  Integer x, y;
  int sign_x = 1;   // X = sign_x * x^2
  int epsilon = 1;  // right-hand side eps * C
  bool minimal_within_bound = true;
};

// Admissible residue description for one sign sector. All constraints are
// periodic in x modulo `period`; the admissible x mod period form the CRT
// product of the per-prime-power sets.
struct SectorClasses {
  int sign_x = 1;
  int epsilon = 1;
  Integer period;
  std::vector<ResidueSet> per_prime_power;
  bool is_empty() const;
  Integer class_count() const;  // admissible residues mod period
  bool admits(const Integer& x) const;
  // first obstructed block, when empty
  std::optional<std::pair<Integer, std::string>> obstruction() const;
};

struct Verdict {
  unsigned k = 0;
  Status status = Status::Undecided;
  std::optional<SignatureEquation> equation;      // even k
  std::optional<OddKTestResult> odd_k_test;             // odd k
  std::vector<Congruence> system;                 // recomputed congruences
  std::vector<SectorClasses> sectors;             // the two essential sectors
  std::optional<Witness> witness;
  std::optional<std::string> note;
};

struct DecideOptions {
  FactorConfig factor;
  std::uint64_t witness_scan_limit = 5'000'000;  // minimality search bound
  std::uint64_t enumeration_budget = 100'000'000;  // brute-force fallback cap
};

// For odd k: the numerator obstruction test. For even k: builds the
// signature equation and
// the recomputed congruence system, determines the admissible residue set of
// x per prime power of the global period in the two essential sign sectors
// (sign_x = +1, eps = +-1; the mirrored sectors are equivalent under
// y -> -y), and reports Solvable with the smallest witness within the scan
// bound or Empty with an obstruction.
Verdict decide(unsigned k, const DecideOptions& opts = {});

// The `count` admissible x of smallest absolute value with their induced y.
// Requires a Solvable verdict.
std::vector<Witness> enumerate_solutions(const Verdict& verdict, std::size_t count,
                                         const DecideOptions& opts = {});
std::vector<Witness> enumerate_solutions(unsigned k, std::size_t count,
                                         const DecideOptions& opts = {});

struct ConstraintCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Diagnostic evaluation of a claimed solution: exact signature residual,
// each recomputed congruence, and each published reference congruence
// where reference data exists. Never mutates state.
struct VerifyReport {
  unsigned k = 0;
  Integer x, y;
  int sign_x = 1, epsilon = 1;
  Integer residual;       // A X + B y - eps C
  bool nonzero_x = false; // x = 0 cannot give a nonzero fundamental class
  bool equation_pass = false;
  std::vector<ConstraintCheck> recomputed;
  std::vector<ConstraintCheck> reference;

  bool all_pass() const;  // equation + nonzero x + recomputed congruences
};

VerifyReport verify_solution(unsigned k, const Integer& x, const Integer& y,
                             int sign_x, int epsilon);

}  // namespace ratplane
