#include <iostream>

#include "CLI11.hpp"
#include "sltaylor_cli/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Recursive-integral bases, SPPS solutions and generalized Taylor tools"};
  std::string command;
  std::string config_path;
  std::string out_dir;
  bool verbose = false;
  app.add_option("command", command, "Command to run; must match the config when both are given")
      ->check(CLI::IsMember({"basis", "solve", "eigs", "taylor", "approx"}));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_dir, "Output directory (overrides output_dir in the config)");
  app.add_flag("--verbose", verbose, "Progress messages on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : sltaylor::cli::kExitUsage;
  }

  sltaylor::cli::Invocation inv;
  inv.config_path = config_path;
  if (!out_dir.empty()) inv.out_dir = out_dir;
  if (!command.empty()) inv.command = command;
  inv.verbose = verbose;
  return sltaylor::cli::run(inv, std::cerr);
}
