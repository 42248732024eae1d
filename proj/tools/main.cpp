#include <iostream>

#include <CLI11.hpp>

#include "ballean/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace ballean::cli;
  CLI::App app{"Windowed coarse spaces, selectors and 2-selector search"};
  RunOptions options;
  std::string output;
  std::string format = "json";
  long long seed = 0;
  app.add_option("--scenario", options.scenario_path, "Scenario JSON file")->required();
  app.add_option("--output", output, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Reserved; every run is deterministic");
  app.add_option("--max-steps", options.max_steps, "Search budget (decisions plus prunes); 0 = none");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  options.format = format == "text" ? Format::Text : Format::Json;
  if (!output.empty()) options.output_path = output;

  const auto result = run(options);
  if (!result.diagnostic.empty()) std::cerr << "ballean: " << result.diagnostic << "\n";
  if (!options.output_path) std::cout << result.report;
  return result.exit_code;
}
