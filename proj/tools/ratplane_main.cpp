// Command-line front end: per-dimension decisions, range scans, witness
// verification, the integrality row table, and cobordism model tables.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ratplane/commands.hpp"

namespace {

// Route output through --out when given, stdout otherwise.
struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) {
      std::cerr << "cannot open output file: " << path << "\n";
      return false;
    }
    stream = &file;
    return true;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational projective plane existence solver"};
  app.require_subcommand(1);

  ratplane::RunConfig cfg;
  unsigned k = 0, kmax = 0;
  std::string out_path;
  std::string x_str, y_str, model_expr;
  std::string sign_x_str, epsilon_str;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--count", cfg.count, "solutions to enumerate (default 3)");
    cmd->add_option("--seed", cfg.seed, "RNG seed for factorization (default 0)");
    cmd->add_option("--budget", cfg.budget,
                    "iteration budget for factorization / brute-force fallback");
    cmd->add_option("--format", cfg.format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  CLI::App* decide = app.add_subcommand("decide", "decide one dimension 4k");
  decide->add_option("--k", k, "half-dimension/2 parameter k")->required();
  add_common(decide);

  CLI::App* scan = app.add_subcommand("scan", "decide every k up to --kmax");
  scan->add_option("--kmax", kmax, "largest k to decide")->required();
  add_common(scan);

  CLI::App* table = app.add_subcommand("table", "integrality row table for even k");
  table->add_option("--k", k, "half-dimension/2 parameter k (even)")->required();
  add_common(table);

  CLI::App* verify = app.add_subcommand("verify", "check a claimed solution");
  verify->add_option("--k", k, "half-dimension/2 parameter k (even)")->required();
  verify->add_option("--x", x_str, "claimed x (decimal, arbitrary precision)")
      ->required();
  verify->add_option("--y", y_str, "claimed y (decimal, arbitrary precision)")
      ->required();
  verify->add_option("--sign-x", sign_x_str, "+1 or -1 (default: try all)");
  verify->add_option("--epsilon", epsilon_str, "+1 or -1 (default: try all)");
  add_common(verify);

  CLI::App* cobordism =
      app.add_subcommand("cobordism", "Pontryagin numbers of explicit manifolds");
  cobordism
      ->add_option("--model", model_expr,
                   "model expression, e.g. 'cp2*cp2' or '9*cp8 + h3,6'")
      ->required();
  add_common(cobordism);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  OutputTarget target;
  if (!target.open(out_path)) return 1;

  try {
    if (decide->parsed()) {
      cfg.k = k;
      return ratplane::cmd_decide(cfg, *target.stream, std::cerr);
    }
    if (scan->parsed()) {
      cfg.kmax = kmax;
      return ratplane::cmd_scan(cfg, *target.stream, std::cerr);
    }
    if (table->parsed()) {
      cfg.k = k;
      return ratplane::cmd_table(cfg, *target.stream, std::cerr);
    }
    if (verify->parsed()) {
      cfg.k = k;
      std::optional<std::string> sx, eps;
      if (!sign_x_str.empty()) sx = sign_x_str;
      if (!epsilon_str.empty()) eps = epsilon_str;
      return ratplane::cmd_verify(cfg, x_str, y_str, sx, eps, *target.stream,
                                  std::cerr);
    }
    if (cobordism->parsed())
      return ratplane::cmd_cobordism(cfg, model_expr, *target.stream, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
