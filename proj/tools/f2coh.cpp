// f2coh: command-line front end for ring-definition files.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "f2coh/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Computer algebra for F2 graded-commutative rings"};
  app.require_subcommand(1);
  f2coh::CommandOptions options;

  for (const auto& name : f2coh::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", options.file, "ring-definition file")->required()->check(CLI::ExistingFile);
    sub->add_option_function<int>("--up-to", [&](const int& v) { options.up_to = v; }, "truncation degree");
    sub->add_flag("--json", options.json, "machine-readable output");
    if (name != "verify-paper" && name != "serre" && name != "morphism") {
      sub->add_option_function<std::string>("--ring", [&](const std::string& v) { options.ring = v; }, "ring name");
    }
    if (name == "qcohomology" || name == "bockstein") {
      sub->add_option_function<std::string>("--derivation", [&](const std::string& v) { options.derivation = v; },
                                            "derivation name");
    }
    if (name == "nilpotency") {
      sub->add_option_function<std::string>("--element", [&](const std::string& v) { options.element = v; },
                                            "element name or expression");
    }
    if (name == "morphism") {
      sub->add_option_function<std::string>("--morphism", [&](const std::string& v) { options.morphism = v; },
                                            "morphism name");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const auto result = f2coh::run_command(command, options);
    std::cout << result.output;
    return result.exit_code;
  } catch (const f2coh::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const f2coh::Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
