#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "obsq/membership.hpp"
#include "obsq/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"obscure-qubit script runner"};
  app.require_subcommand(1);

  std::string script;
  std::string format = "text";
  std::string model;
  double tolerance = obsq::kDefaultTolerance;
  long long seed = 0;

  CLI::App* run = app.add_subcommand("run", "execute a script file");
  run->add_option("script", script, "script file")->required();
  run->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  run->add_option("--model", model,
                  "membership model override (born, arc, circle-square)");
  run->add_option("--tolerance", tolerance, "numeric tolerance");
  run->add_option("--seed", seed, "reserved; accepted and ignored");

  CLI::App* check =
      app.add_subcommand("selfcheck", "run the built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (check->parsed()) return obsq::selfcheck(std::cout);

  obsq::RunOptions options;
  options.format = format == "json" ? obsq::OutputFormat::Json
                                    : obsq::OutputFormat::Text;
  options.tolerance = tolerance;
  if (!model.empty()) {
    const auto parsed = obsq::parse_membership_model(model);
    if (!parsed) {
      std::cerr << "error: unknown membership model '" << model << "'\n";
      return 1;
    }
    options.model_override = *parsed;
  }
  return obsq::run_script(script, options, std::cout, std::cerr);
}
