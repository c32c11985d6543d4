#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace qclone::cli;
  CLI::App app{"qclone: Fourier-dual cloning machines"};
  std::string command = "verify", format = "csv";
  RunConfig cfg;
  double tolerance = 0;

  app.add_option("--command", command, "verify | table | tradeoff | clone | entropy")
      ->check(CLI::IsMember({"verify", "table", "tradeoff", "clone", "entropy"}));
  app.add_option("--family", cfg.family, "family or preset name, or family JSON");
  app.add_option("--matrix", cfg.matrix, "amplitude matrix JSON (inline or path)");
  app.add_option("--state", cfg.state, "input state JSON (inline or path)");
  app.add_option("--grid", cfg.grid, "trade-off grid size")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  app.add_option("--out", cfg.out, "output file (relative to $QCLONE_OUTPUT_DIR if set)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  auto* tol = app.add_option("--tolerance", tolerance, "verification tolerance override")
                  ->check(CLI::PositiveNumber);
  app.add_option("--only", cfg.only, "run verification claims containing this text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = command_from_string(command);
  cfg.format = format_from_string(format);
  if (tol->count() > 0) cfg.tolerance = tolerance;
  return execute(cfg, std::cout, std::cerr);
}
