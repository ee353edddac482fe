// Command implementations behind the CLI front end; kept in the library so
// they can be exercised directly by tests. All payloads are deterministic:
// fixed key order, decimal strings for every number, no timestamps.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ratplane/diophantine.hpp"

namespace ratplane {

struct RunConfig {
  std::optional<unsigned> k;
  std::optional<unsigned> kmax;
  unsigned count = 3;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
  std::string format = "json";  // json | tsv
};

DecideOptions decide_options(const RunConfig& cfg);

// exit code: 0 Solvable, 3 Empty/obstructed, 2 undecided/inconclusive
int exit_code_for(Status s);

std::string verdict_to_json(const Verdict& v, unsigned solution_count,
                            const DecideOptions& opts, bool compact);
std::string verify_report_to_json(const VerifyReport& rep);

int cmd_decide(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const std::string& x, const std::string& y,
               const std::optional<std::string>& sign_x,
               const std::optional<std::string>& epsilon, std::ostream& out,
               std::ostream& err);
int cmd_cobordism(const RunConfig& cfg, const std::string& model_expr,
                  std::ostream& out, std::ostream& err);

}  // namespace ratplane
