#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gc4/error.hpp"
#include "gc4/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gc4::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gc4calc - torus-surgery calculus for generalized complex 4-manifolds"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "parse and execute scenario scripts");
  std::vector<std::string> files;
  bool json = false;
  gc4::Budgets budgets;
  run->add_option("files", files, "scenario scripts")->required()->expected(-1);
  run->add_flag("--json", json, "emit the JSON report instead of the table");
  run->add_option("--max-cosets", budgets.max_cosets, "coset enumeration bound")
      ->capture_default_str();
  run->add_option("--tietze-budget", budgets.tietze_budget, "simplification step budget")
      ->capture_default_str();
  run->add_option("--relator-cap", budgets.relator_cap, "relator length cap for substitutions")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  std::vector<gc4::ScenarioResult> results;
  bool any_fail = false;
  for (const std::string& file : files) {
    try {
      std::string text = read_file(file);
      std::string stem = std::filesystem::path(file).stem().string();
      gc4::ScenarioScript script = gc4::parse_scenario(text, stem);
      gc4::ScenarioResult result = gc4::execute_scenario(script, budgets);
      any_fail = any_fail || result.any_fail();
      results.push_back(std::move(result));
    } catch (const gc4::ParseError& e) {
      std::cerr << file << ":" << e.line() << ":" << e.column() << ": error: " << e.what()
                << "\n";
      return 2;
    } catch (const gc4::Error& e) {
      std::cerr << file << ": error: " << e.what() << "\n";
      return 2;
    }
  }
  std::cout << gc4::emit_report(results, json ? gc4::ReportFormat::Json : gc4::ReportFormat::Human);
  return any_fail ? 1 : 0;
}
