#include "ratplane/paper_data.hpp"

#include <mutex>

namespace ratplane {

namespace {

struct RawRow {
  const char* lambda;
  const char* c_sq;
  const char* c_top;
};

// The published dimension-32 basis table for Z[e_1, e_2, ...].L, restricted
// to p_4 and p_8. Rows listed in the published order.
constexpr RawRow kDim32Table[] = {
    {"()", "-444721/162820783125", "118518239/162820783125"},
    {"1", "-1260361/373621248000", "-1/1307674368000"},
    {"2", "185276207/435891456000", "5461/217945728000"},
    {"1,1", "1/25401600", "0"},
    {"3", "-678599/119750400", "-31/2851200"},
    {"2,1", "-1/201600", "0"},
    {"1,1,1", "0", "0"},
    {"4", "61699/3628800", "457/604800"},
    {"3,1", "1/15120", "0"},
    {"2,2", "1/1600", "0"},
    {"5", "0", "-43/2520"},
    {"4,1", "-1/5040", "0"},
    {"3,2", "-1/120", "0"},
    {"6", "0", "29/180"},
    {"4,2", "1/40", "0"},
    {"3,3", "1/9", "0"},
    {"5,1", "0", "0"},
    {"7", "0", "-2/3"},
    {"4,3", "-1/3", "0"},
    {"5,2", "0", "0"},
    {"6,1", "0", "0"},
    {"8", "0", "1"},
    {"4,4", "1", "0"},
    {"5,3", "0", "0"},
    {"6,2", "0", "0"},
    {"7,1", "0", "0"},
};

}  // namespace

const std::vector<IntegralityRow>& reference_dim32_table() {
  static std::mutex mu;
  static std::vector<IntegralityRow> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) {
    for (const RawRow& r : kDim32Table)
      table.push_back({Partition::parse(r.lambda), parse_rational(r.c_sq),
                       parse_rational(r.c_top)});
  }
  return table;
}

const std::vector<ReferenceCongruence>& reference_dim32_system() {
  static const std::vector<ReferenceCongruence> sys = {
      {parse_integer("162820783125"), parse_integer("-444721"), parse_integer("118518239")},
      {parse_integer("638512875"), parse_integer("8822527"), parse_integer("2")},
      {parse_integer("212837625"), parse_integer("185276207"), parse_integer("10922")},
      {parse_integer("467775"), parse_integer("678599"), parse_integer("1302")},
      {parse_integer("14175"), parse_integer("61699"), parse_integer("2742")},
      {parse_integer("99225"), parse_integer("1"), parse_integer("0")},
      {parse_integer("315"), parse_integer("0"), parse_integer("1")},
  };
  return sys;
}

Rational reference_dim32_l_p4_coeff() { return parse_rational("241/14175"); }

Integer reference_dim32_witness_x() { return parse_integer("1308536224920225"); }

Integer reference_dim32_witness_y() {
  return parse_integer("6425012065870154712076616250");
}

const IntegralityRow& reference_dim16_e2_row() {
  static const IntegralityRow row{Partition::single(2), parse_rational("-1/48"),
                                  parse_rational("1/40")};
  return row;
}

ReferenceCongruence reference_dim16_congruence() {
  return {parse_integer("15"), parse_integer("-5"), parse_integer("6")};
}

Rational reference_dim16_l_p2_coeff() { return parse_rational("-1/45"); }

std::vector<ErrataCell> errata_against_reference(unsigned k) {
  std::vector<ErrataCell> out;
  auto diff_row = [&out](const IntegralityRow& published,
                         const IntegralityRow& recomputed) {
    if (published.c_sq != recomputed.c_sq)
      out.push_back({published.lambda.str(), "c_sq", published.c_sq, recomputed.c_sq});
    if (published.c_top != recomputed.c_top)
      out.push_back({published.lambda.str(), "c_top", published.c_top, recomputed.c_top});
  };

  if (k == 8) {
    const Rational mine = l_class(8).coefficient(Partition::single(4));
    if (mine != reference_dim32_l_p4_coeff())
      out.push_back({"L", "p_4", reference_dim32_l_p4_coeff(), mine});
    const auto rows = integrality_rows(8);
    for (const auto& pub : reference_dim32_table()) {
      for (const auto& row : rows) {
        if (row.lambda == pub.lambda) {
          diff_row(pub, row);
          break;
        }
      }
    }
  } else if (k == 4) {
    const Rational mine = l_class(4).coefficient(Partition::single(2));
    if (mine != reference_dim16_l_p2_coeff())
      out.push_back({"L", "p_2", reference_dim16_l_p2_coeff(), mine});
    const auto rows = integrality_rows(4);
    for (const auto& row : rows) {
      if (row.lambda == reference_dim16_e2_row().lambda) {
        diff_row(reference_dim16_e2_row(), row);
        break;
      }
    }
  }
  return out;
}

}  // namespace ratplane
