#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilplab/io.hpp"
#include "nilplab/scenarios.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

int emit_report(const nilplab::scenarios::ScenarioReport& rep,
                const std::string& output) {
  if (output == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.pretty();
  }
  return rep.all_pass() ? kExitPass : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic nilpotence and solvability toolkit for "
               "structure-constant algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "pretty";
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"pretty", "json"}))
      ->capture_default_str();

  std::string analyze_path;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "full diagnostic of an algebra file");
  analyze_cmd->add_option("path", analyze_path, "algebra JSON file")
      ->required();

  std::string scenario_name;
  std::size_t degree = 0;
  std::uint64_t prime = 0;
  std::string config_path;
  auto* scenario_cmd =
      app.add_subcommand("scenario", "run a named reproduction scenario");
  scenario_cmd->add_option("name", scenario_name, "scenario name (see list)")
      ->required();
  scenario_cmd->add_option("--degree", degree,
                           "truncation degree / family size");
  scenario_cmd->add_option("--prime", prime, "characteristic for modp-lie");
  scenario_cmd->add_option("--config", config_path,
                           "truncated-free-algebra config (custom scenario)");

  std::string tower_name;
  std::vector<std::size_t> tower_degrees;
  auto* tower_cmd = app.add_subcommand(
      "tower", "truncation-tower coherence and witness growth");
  tower_cmd->add_option("name", tower_name, "y-xyz or y-xy-yx")->required();
  tower_cmd->add_option("degrees", tower_degrees, "stage degrees")
      ->required()
      ->expected(-1);

  auto* list_cmd = app.add_subcommand("list", "list registered scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      const nilplab::Algebra A = nilplab::read_algebra_file(analyze_path);
      const nilplab::AnalysisReport rep = nilplab::analyze(A);
      if (output == "json") {
        std::cout << nilplab::analysis_to_json(rep).dump(2) << "\n";
      } else {
        std::cout << nilplab::analysis_pretty(rep);
      }
      return kExitPass;
    }
    if (*scenario_cmd) {
      if (scenario_name == "custom") {
        if (config_path.empty()) {
          std::cerr << "scenario custom requires --config\n";
          return kExitUsage;
        }
        const auto stage = nilplab::read_trunc_file(config_path);
        return emit_report(nilplab::scenarios::run_custom_trunc(stage),
                           output);
      }
      nilplab::scenarios::ScenarioParams params;
      if (degree > 0) params.degree = degree;
      if (prime > 0) params.prime = prime;
      if (scenario_cmd->count("--degree") && degree == 0) {
        std::cerr << "--degree must be positive\n";
        return kExitUsage;
      }
      if (scenario_name == "all") {
        const auto reports = nilplab::scenarios::run_all(params);
        bool all_pass = true;
        nlohmann::json agg = nlohmann::json::array();
        for (const auto& rep : reports) {
          if (output == "json") {
            agg.push_back(rep.to_json());
          } else {
            std::cout << rep.pretty();
          }
          all_pass = all_pass && rep.all_pass();
        }
        if (output == "json") std::cout << agg.dump(2) << "\n";
        return all_pass ? kExitPass : kExitVerdictFailure;
      }
      return emit_report(nilplab::scenarios::run_scenario(scenario_name, params),
                         output);
    }
    if (*tower_cmd) {
      return emit_report(nilplab::scenarios::run_tower(tower_name, tower_degrees),
                         output);
    }
    if (*list_cmd) {
      for (const std::string& name : nilplab::scenarios::scenario_names()) {
        std::cout << name << "\n";
      }
      std::cout << "all (every scenario, defaults)\ncustom (requires --config)\n";
      return kExitPass;
    }
  } catch (const nilplab::InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const nilplab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
