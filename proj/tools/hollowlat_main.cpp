#include <iostream>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "hollowlat/cli.hpp"
#include "hollowlat/error.hpp"

namespace {

std::string describe(std::string_view command) {
  if (command == "submodules") return "list submodules in canonical order";
  if (command == "spectra") return "all spectra of the lattice and its duality checks";
  if (command == "pshollow") return "PS-hollow submodules with their profiles";
  if (command == "represent") return "minimal PS-hollow and second representations";
  if (command == "minimize") return "reduce a PS-hollow representation to a minimal one";
  if (command == "verify") return "run the hypothesis-gated check battery";
  return "Hasse diagram in DOT";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hollowlat;

  CLI::App app{"Lattice spectra and PS-hollow analysis of finite modules"};
  app.require_subcommand(1, 1);

  AnalysisRequest request;
  std::size_t bound = 0;
  std::string highlight = "second";

  for (auto name : kCommands) {
    auto* sub = app.add_subcommand(std::string(name), describe(name));
    sub->add_option("--in", request.input_path, "module or lattice spec file")->required();
    sub->add_option("--max-terms", request.max_terms, "summand limit for representation searches (0: none)");
    sub->add_option("--bound", bound, "module order bound (default 4096 or HOLLOWLAT_BOUND)");
    sub->add_option("--dot", request.dot_path, "write the Hasse diagram here");
    sub->add_option("--report", request.report_path, "write the machine-readable report here");
    if (name == "minimize") sub->add_option("--rep", request.representation, "summands, e.g. \"(3);(4);(6)\"");
    if (name == "hasse" || name == "spectra") {
      sub->add_option("--highlight", highlight, "spectrum kind to mark in the diagram");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputErrorExit;
  }

  request.command = app.get_subcommands().front()->get_name();
  if (bound > 0) request.bound = bound;
  if (const auto kind = parse_spectrum_kind(highlight)) {
    request.highlight = *kind;
  } else {
    std::cerr << "error: unknown spectrum kind '" << highlight << "'\n";
    return kInputErrorExit;
  }

  try {
    const auto result = run(request);
    if (result.exit_code == kInputErrorExit) {
      std::cerr << "error: " << result.error << '\n';
      return result.exit_code;
    }
    std::cout << result.output;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
