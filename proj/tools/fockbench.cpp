#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fockbench/cli.hpp"
#include "fockbench/report.hpp"
#include "fockbench/verify.hpp"

extern "C" void openblas_set_num_threads(int);

namespace {

constexpr int kExitPass = 0;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;
constexpr int kExitAssertion = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw fockbench::ConfigError("cannot read config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockbench: a numerical laboratory for scaled second "
               "quantization and its semiclassical limits"};
  app.require_subcommand(1);

  std::string config_path, out_dir, scenario_name;
  long long seed = -1;
  int jobs = 1;

  CLI::App* verify =
      app.add_subcommand("verify-core", "Run the structural invariant battery");
  verify->add_option("--out", out_dir, "Directory for summary/verdict files");
  verify->add_option("--seed", seed, "Seed for the randomized checks");
  verify->add_option("--jobs", jobs, "Linear-algebra thread count");

  CLI::App* scenario =
      app.add_subcommand("scenario", "Run a named convergence scenario");
  scenario->add_option("--name", scenario_name, "Scenario name")->required();
  scenario->add_option("--config", config_path, "JSON configuration file");
  scenario->add_option("--out", out_dir, "Directory for summary/table files");
  scenario->add_option("--seed", seed, "Override the scenario seed");
  scenario->add_option("--jobs", jobs, "Linear-algebra thread count");

  CLI::App* list =
      app.add_subcommand("list", "List scenarios and their parameter schemas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    openblas_set_num_threads(jobs < 1 ? 1 : jobs);

    if (list->parsed()) {
      std::cout << fockbench::scenario_listing_json();
      return kExitPass;
    }

    fockbench::ScenarioReport report;
    if (verify->parsed()) {
      report = fockbench::core_verification(
          seed >= 0 ? static_cast<unsigned long long>(seed) : 20260819ULL);
    } else {
      const std::string config_text =
          config_path.empty() ? std::string() : read_file(config_path);
      std::optional<unsigned long long> seed_override;
      if (seed >= 0) seed_override = static_cast<unsigned long long>(seed);
      report = fockbench::run_scenario(scenario_name, config_text,
                                       seed_override);
    }

    std::cout << fockbench::render_verdict_log(report);
    if (!out_dir.empty()) {
      fockbench::write_scenario_outputs(report, out_dir);
    }
    return report.pass() ? kExitPass : kExitAssertion;
  } catch (const fockbench::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fockbench::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource error: allocation failed\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitAssertion;
  }
}
