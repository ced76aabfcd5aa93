// Command-line front end: vgcone <command> [file] [flags]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vgcone/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vgcone::cli::InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Varchenko-Gel'fand rings of hyperplane arrangement cones"};
  std::string command;
  std::string input;
  std::string fixture;
  std::string function_file;
  std::string format = "json";
  std::vector<std::size_t> order;
  vgcone::cli::RunOptions options;

  std::string command_help = "one of:";
  for (const auto& c : vgcone::cli::commands()) command_help += " " + c;
  app.add_option("command", command, command_help)->required();
  app.add_option("input", input, "arrangement document (JSON)");
  app.add_option("--fixture", fixture, "use a bundled input: exa, exb, a5cone, braid2..braid6");
  app.add_option("--order", order, "hyperplane order, smallest first, 1-based (e.g. --order 3 1 2)");
  app.add_option("--truncate", options.truncate, "truncation order for the koszul series")->check(CLI::NonNegativeNumber);
  app.add_flag("--search-order", options.search_order, "koszul: search for an order with quadratic broken circuits");
  app.add_flag("--field", options.field, "run ring checks over Q instead of Z");
  app.add_flag("--oracle", options.oracle, "additionally run brute-force oracles and compare");
  app.add_option("--function", function_file, "expand: chamber-function JSON file");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", options.threads, "worker threads for chamber enumeration")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (input.empty() == fixture.empty()) throw vgcone::cli::InputError("give exactly one of an input file or --fixture");
    const auto doc = fixture.empty() ? vgcone::cli::load_document(input) : vgcone::cli::fixture(fixture);
    if (!order.empty()) options.order = order;
    if (!function_file.empty()) options.function = vgcone::cli::parse_chamber_function(read_file(function_file));
    const auto result = vgcone::cli::run(command, doc, options);
    std::cout << (format == "text" ? vgcone::cli::render_text(result.report) : vgcone::cli::render_json(result.report));
    return result.exit_code;
  } catch (const vgcone::cli::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vgcone::ArrangementError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
