#include "ratplane/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ratplane/cobordism_oracle.hpp"
#include "ratplane/paper_data.hpp"

namespace ratplane {

using ordered_json = nlohmann::ordered_json;

DecideOptions decide_options(const RunConfig& cfg) {
  DecideOptions opts;
  opts.factor.rho_seed = cfg.seed;
  opts.enumeration_budget = cfg.budget;
  return opts;
}

int exit_code_for(Status s) {
  switch (s) {
    case Status::Solvable: return 0;
    case Status::Empty:
    case Status::OddKObstruction: return 3;
    case Status::Inconclusive:
    case Status::Undecided: return 2;
  }
  return 2;
}

namespace {

ordered_json congruence_json(const Congruence& c) {
  return ordered_json{{"m", to_string(c.modulus)},
                      {"u", to_string(c.u)},
                      {"v", to_string(c.v)}};
}

ordered_json reference_congruence_json(const ReferenceCongruence& c) {
  return ordered_json{{"m", to_string(c.modulus)},
                      {"u", to_string(c.u)},
                      {"v", to_string(c.v)}};
}

ordered_json residue_set_json(const ResidueSet& s) {
  ordered_json j;
  j["prime_power"] = to_string(s.prime_power);
  j["stride"] = to_string(s.stride);
  j["residue_count"] = to_string(s.count());
  ordered_json res = ordered_json::array();
  constexpr std::size_t kMaxListed = 128;
  for (std::size_t i = 0; i < s.residues.size() && i < kMaxListed; ++i)
    res.push_back(to_string(s.residues[i]));
  j["residues"] = std::move(res);
  j["residues_truncated"] = s.residues.size() > kMaxListed;
  if (s.obstruction) j["obstruction"] = *s.obstruction;
  return j;
}

ordered_json witness_json(const Witness& w) {
  return ordered_json{{"x", to_string(w.x)},
                      {"y", to_string(w.y)},
                      {"sign_x", w.sign_x > 0 ? "+1" : "-1"},
                      {"epsilon", w.epsilon > 0 ? "+1" : "-1"},
                      {"minimal_within_bound", w.minimal_within_bound}};
}

ordered_json reference_system_diagnostics(const Verdict& v) {
  ordered_json diag;
  if (v.k == 8) {
    ordered_json published = ordered_json::array();
    for (const auto& c : reference_dim32_system())
      published.push_back(reference_congruence_json(c));
    diag["published_system"] = std::move(published);
  } else if (v.k == 4) {
    diag["published_system"] =
        ordered_json::array({reference_congruence_json(reference_dim16_congruence())});
  } else {
    return nullptr;
  }
  ordered_json recomputed = ordered_json::array();
  for (const auto& c : v.system) recomputed.push_back(congruence_json(c));
  diag["recomputed_system"] = std::move(recomputed);
  if (v.witness) {
    const Witness& w = *v.witness;
    const Integer big_x = w.sign_x > 0 ? Integer(w.x * w.x) : Integer(-(w.x * w.x));
    ordered_json checks = ordered_json::array();
    const auto& ref = v.k == 8 ? reference_dim32_system()
                               : std::vector<ReferenceCongruence>{
                                     reference_dim16_congruence()};
    for (const auto& c : ref) {
      checks.push_back(ordered_json{
          {"m", to_string(c.modulus)},
          {"holds", mod_floor(c.u * big_x + c.v * w.y, c.modulus) == 0}});
    }
    diag["witness_under_published_system"] = std::move(checks);
  }
  return diag;
}

}  // namespace

std::string verdict_to_json(const Verdict& v, unsigned solution_count,
                            const DecideOptions& opts, bool compact) {
  ordered_json j;
  j["k"] = to_string(Integer(v.k));
  j["dimension"] = to_string(Integer(4 * v.k));
  j["status"] = status_name(v.status);
  if (v.equation) {
    j["equation"] = ordered_json{{"A", to_string(v.equation->a_sq)},
                                 {"B", to_string(v.equation->b_top)},
                                 {"C", to_string(v.equation->c_rhs)}};
  }
  if (v.odd_k_test) {
    j["odd_k_test"] = ordered_json{
        {"s_numerator", to_string(v.odd_k_test->s_numerator)},
        {"obstructed", v.odd_k_test->obstructed}};
  }
  if (!v.system.empty()) {
    ordered_json sys = ordered_json::array();
    for (const auto& c : v.system) sys.push_back(congruence_json(c));
    j["congruence_system"] = std::move(sys);
  }
  j["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);

  if (!v.sectors.empty()) {
    ordered_json sectors = ordered_json::array();
    for (const auto& s : v.sectors) {
      ordered_json sj;
      sj["sign_x"] = s.sign_x > 0 ? "+1" : "-1";
      sj["epsilon"] = s.epsilon > 0 ? "+1" : "-1";
      sj["period"] = to_string(s.period);
      sj["admissible_count"] = to_string(s.class_count());
      ordered_json blocks = ordered_json::array();
      for (const auto& set : s.per_prime_power) blocks.push_back(residue_set_json(set));
      sj["prime_powers"] = std::move(blocks);
      sectors.push_back(std::move(sj));
    }
    j["residue_classes"] = std::move(sectors);
  } else {
    j["residue_classes"] = nullptr;
  }

  if (v.status == Status::Empty) {
    ordered_json obs = ordered_json::array();
    for (const auto& s : v.sectors) {
      auto o = s.obstruction();
      if (!o) continue;
      obs.push_back(ordered_json{{"sign_x", s.sign_x > 0 ? "+1" : "-1"},
                                 {"epsilon", s.epsilon > 0 ? "+1" : "-1"},
                                 {"prime_power", to_string(o->first)},
                                 {"reason", o->second}});
    }
    j["obstruction"] = std::move(obs);
  } else if (v.status == Status::OddKObstruction) {
    j["obstruction"] = ordered_json{{"s_numerator", to_string(v.odd_k_test->s_numerator)},
                                    {"reason", v.note.value_or("")}};
  } else {
    j["obstruction"] = nullptr;
  }

  if (v.status == Status::Solvable && solution_count > 0) {
    ordered_json sols = ordered_json::array();
    for (const auto& w : enumerate_solutions(v, solution_count, opts))
      sols.push_back(witness_json(w));
    j["solutions"] = std::move(sols);
  }

  j["paper_system_diagnostics"] = reference_system_diagnostics(v);
  if (v.note) j["note"] = *v.note;
  return compact ? j.dump() : j.dump(2);
}

std::string verify_report_to_json(const VerifyReport& rep) {
  ordered_json j;
  j["k"] = to_string(Integer(rep.k));
  j["dimension"] = to_string(Integer(4 * rep.k));
  j["x"] = to_string(rep.x);
  j["y"] = to_string(rep.y);
  j["sign_x"] = rep.sign_x > 0 ? "+1" : "-1";
  j["epsilon"] = rep.epsilon > 0 ? "+1" : "-1";
  j["residual"] = to_string(rep.residual);
  j["equation_pass"] = rep.equation_pass;
  j["nonzero_x"] = rep.nonzero_x;
  auto checks_json = [](const std::vector<ConstraintCheck>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json cj{{"constraint", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    return arr;
  };
  j["recomputed_system"] = checks_json(rep.recomputed);
  j["paper_system_diagnostics"] = checks_json(rep.reference);
  j["all_pass"] = rep.all_pass();
  return j.dump(2);
}

int cmd_decide(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.k || *cfg.k < 1) {
    err << "decide requires --k K with K >= 1\n";
    return 1;
  }
  const DecideOptions opts = decide_options(cfg);
  const Verdict v = decide(*cfg.k, opts);
  out << verdict_to_json(v, v.status == Status::Solvable ? cfg.count : 0, opts,
                         false)
      << "\n";
  return exit_code_for(v.status);
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.kmax || *cfg.kmax < 1) {
    err << "scan requires --kmax K with K >= 1\n";
    return 1;
  }
  const unsigned kmax = *cfg.kmax;
  const DecideOptions opts = decide_options(cfg);
  std::vector<Verdict> verdicts(kmax);
#pragma omp parallel for schedule(dynamic)
  for (unsigned k = 1; k <= kmax; ++k) verdicts[k - 1] = decide(k, opts);

  std::optional<unsigned> smallest;
  for (unsigned k = 1; k <= kmax; ++k) {
    out << verdict_to_json(verdicts[k - 1], 0, opts, true) << "\n";
    if (k > 4 && !smallest && verdicts[k - 1].status == Status::Solvable)
      smallest = k;
  }
  if (smallest)
    out << "smallest k>4 solvable: " << *smallest << " (dimension " << 4 * *smallest
        << ")\n";
  else
    out << "none <= " << kmax << " beyond classical k=1,2,4\n";
  return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.k || *cfg.k < 2 || *cfg.k % 2 != 0) {
    err << "table requires --k K with K even and >= 2\n";
    return 1;
  }
  const unsigned k = *cfg.k;
  const auto rows = integrality_rows(k);
  const auto errata = errata_against_reference(k);

  ordered_json errata_json = ordered_json::array();
  for (const auto& cell : errata)
    errata_json.push_back(ordered_json{{"row", cell.row},
                                       {"column", cell.column},
                                       {"published", to_string(cell.published)},
                                       {"recomputed", to_string(cell.recomputed)}});

  // side-by-side congruence systems where reference data exists
  ordered_json systems;
  {
    ordered_json recomputed = ordered_json::array();
    for (const auto& c : build_system(rows)) recomputed.push_back(congruence_json(c));
    systems["recomputed_system"] = std::move(recomputed);
    ordered_json published = ordered_json::array();
    if (k == 8)
      for (const auto& c : reference_dim32_system())
        published.push_back(reference_congruence_json(c));
    else if (k == 4)
      published.push_back(reference_congruence_json(reference_dim16_congruence()));
    systems["published_system"] = std::move(published);
  }

  if (cfg.format == "tsv") {
    out << "lambda\tc_sq\tc_top\n";
    for (const auto& row : rows)
      out << row.lambda.str() << "\t" << to_string(row.c_sq) << "\t"
          << to_string(row.c_top) << "\n";
    out << "# errata " << errata_json.dump() << "\n";
    out << "# systems " << systems.dump() << "\n";
  } else {
    ordered_json j;
    j["k"] = to_string(Integer(k));
    ordered_json rows_json = ordered_json::array();
    for (const auto& row : rows)
      rows_json.push_back(ordered_json{{"lambda", row.lambda.str()},
                                       {"c_sq", to_string(row.c_sq)},
                                       {"c_top", to_string(row.c_top)}});
    j["rows"] = std::move(rows_json);
    j["errata"] = std::move(errata_json);
    j["paper_system_diagnostics"] = std::move(systems);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& x, const std::string& y,
               const std::optional<std::string>& sign_x,
               const std::optional<std::string>& epsilon, std::ostream& out,
               std::ostream& err) {
  if (!cfg.k || *cfg.k < 2 || *cfg.k % 2 != 0) {
    err << "verify requires --k K with K even and >= 2\n";
    return 1;
  }
  Integer xi, yi;
  try {
    xi = parse_integer(x);
    yi = parse_integer(y);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 1;
  }
  auto parse_sign = [&err](const std::string& s, int& outv) {
    if (s == "+1" || s == "+" || s == "1")
      outv = 1;
    else if (s == "-1" || s == "-")
      outv = -1;
    else {
      err << "sign must be +1 or -1, got '" << s << "'\n";
      return false;
    }
    return true;
  };

  std::vector<std::pair<int, int>> combos;
  if (sign_x && epsilon) {
    int s, e;
    if (!parse_sign(*sign_x, s) || !parse_sign(*epsilon, e)) return 1;
    combos = {{s, e}};
  } else {
    combos = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  }

  ordered_json reports = ordered_json::array();
  bool any_pass = false;
  for (auto [s, e] : combos) {
    const VerifyReport rep = verify_solution(*cfg.k, xi, yi, s, e);
    any_pass = any_pass || rep.all_pass();
    reports.push_back(ordered_json::parse(verify_report_to_json(rep)));
  }
  if (reports.size() == 1)
    out << reports[0].dump(2) << "\n";
  else
    out << reports.dump(2) << "\n";
  return any_pass ? 0 : 3;
}

namespace {

struct ParsedTerm {
  Integer coeff;
  std::vector<ManifoldModel> factors;
};

// Grammar: expr := term (('+'|'-') term)*, term := piece ('*' piece)*,
// piece := integer | cpN | hM,N. Example: "-85*cp14 - 16*h3,12 + 2*h5,10".
ManifoldCombo parse_model_expr(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty model expression");

  ManifoldCombo combo;
  std::size_t pos = 0;
  int pending_sign = 1;
  while (pos < s.size()) {
    if (s[pos] == '+') {
      pending_sign = 1;
      ++pos;
      continue;
    }
    if (s[pos] == '-') {
      pending_sign = -1;
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    // '-' inside h{m,n}? no: h uses ','; safe to split on +/-
    std::string term = s.substr(pos, end - pos);
    pos = end;

    Integer coeff(pending_sign);
    std::optional<ManifoldModel> model;
    std::stringstream ts(term);
    std::string piece;
    while (std::getline(ts, piece, '*')) {
      if (piece.empty()) throw std::invalid_argument("empty factor in '" + term + "'");
      if (piece.rfind("cp", 0) == 0) {
        const unsigned n = static_cast<unsigned>(std::stoul(piece.substr(2)));
        ManifoldModel m = ManifoldModel::cp(n);
        model = model ? product(*model, m) : m;
      } else if (piece[0] == 'h') {
        const auto comma = piece.find(',');
        if (comma == std::string::npos)
          throw std::invalid_argument("hypersurface needs hM,N: '" + piece + "'");
        const unsigned m = static_cast<unsigned>(std::stoul(piece.substr(1, comma - 1)));
        const unsigned n = static_cast<unsigned>(std::stoul(piece.substr(comma + 1)));
        ManifoldModel h = ManifoldModel::hypersurface(m, n);
        model = model ? product(*model, h) : h;
      } else {
        coeff *= parse_integer(piece);
      }
    }
    if (!model) throw std::invalid_argument("term '" + term + "' names no manifold");
    combo.terms.emplace_back(coeff, *model);
    pending_sign = 1;
  }
  return combo;
}

}  // namespace

int cmd_cobordism(const RunConfig& cfg, const std::string& model_expr,
                  std::ostream& out, std::ostream& err) {
  (void)cfg;
  ManifoldCombo combo;
  try {
    combo = parse_model_expr(model_expr);
    const unsigned dim = combo.dim();
    if (dim % 4 != 0) {
      err << "dimension " << dim << " is not divisible by 4; no Pontryagin numbers\n";
      return 1;
    }
    const unsigned k = dim / 4;
    out << "# ";
    for (std::size_t i = 0; i < combo.terms.size(); ++i) {
      if (i) out << " + ";
      out << to_string(combo.terms[i].first) << "*" << combo.terms[i].second.name();
    }
    out << " (dimension " << dim << ")\n";
    out << "partition\tvalue\n";
    for (const auto& lambda : partitions_of_weight(k))
      out << lambda.str() << "\t" << to_string(combo.pontryagin_number(lambda))
          << "\n";
    out << "s_" << k << "\t" << to_string(combo.s_number()) << "\n";
    out << "L\t" << to_string(combo.l_genus_pairing()) << "\n";
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ratplane
