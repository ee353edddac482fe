// Published reference values carried as fixture data for diagnostic
// comparison reports. Nothing here participates in any decision path; the
// solver always runs on recomputed values, and these tables exist so the
// emitted reports can show both sides wherever they disagree.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratplane/char_classes.hpp"

namespace ratplane {

// Raw congruence as published: modulus | u*x^2 + v*y.
struct ReferenceCongruence {
  Integer modulus, u, v;
};

// Dimension-32 (k = 8) reference data.
const std::vector<IntegralityRow>& reference_dim32_table();
const std::vector<ReferenceCongruence>& reference_dim32_system();
Rational reference_dim32_l_p4_coeff();  // the published p_4 coefficient of L
// The published example solution of the dimension-32 equation.
Integer reference_dim32_witness_x();
Integer reference_dim32_witness_y();

// Dimension-16 (k = 4) reference data: the published e_2 row and the
// congruence derived from it, plus the published p_2 coefficient of L.
const IntegralityRow& reference_dim16_e2_row();
ReferenceCongruence reference_dim16_congruence();
Rational reference_dim16_l_p2_coeff();

// One errata cell: a table entry where the recomputed value differs from
// the published one.
struct ErrataCell {
  std::string row;     // partition string, or "L" for the L-class itself
  std::string column;  // "c_sq" / "c_top"
  Rational published;
  Rational recomputed;
};

// Diff of recomputed integrality data against the reference tables. Only
// k = 8 and k = 4 carry reference data; other k yield an empty diff.
std::vector<ErrataCell> errata_against_reference(unsigned k);

}  // namespace ratplane
