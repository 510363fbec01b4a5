#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lanesim/config.hpp"
#include "lanesim/errors.hpp"
#include "lanesim/io.hpp"
#include "lanesim/scenarios.hpp"
#include "lanesim/solver.hpp"
#include "lanesim/verify.hpp"

namespace {

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
  const lanesim::RunConfig config = lanesim::parse_config(config_path);
  const lanesim::RunOutput output = lanesim::run(config);
  lanesim::write_run_outputs(config, output, out_dir);
  std::cout << config.name << ": " << output.steps << " steps, " << output.snapshots.size()
            << " snapshots -> " << out_dir << "\n";
  return 0;
}

int cmd_preset(const std::string& name, const std::string& out_dir) {
  const lanesim::PresetName preset = lanesim::preset_from_name(name);
  const std::vector<lanesim::RunConfig> runs = lanesim::expand_preset(preset);
  for (const lanesim::RunConfig& config : runs) {
    const lanesim::RunOutput output = lanesim::run(config);
    const std::string dir = out_dir + "/" + config.name;
    lanesim::write_run_outputs(config, output, dir);
    std::cout << config.name << ": " << output.steps << " steps -> " << dir << "\n";
  }
  return 0;
}

int cmd_table1(const std::string& out_dir) {
  const lanesim::Table1Result table = lanesim::reproduce_table1();
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream f(out_dir + "/table1.csv");
    f << table.csv();
  }
  {
    std::ofstream f(out_dir + "/table1_comparison.csv");
    f << table.comparison_csv();
  }
  std::cout << table.comparison_csv();
  std::cout << "max relative deviation: " << table.max_rel_dev() << "\n";
  std::cout << "columns strictly decreasing: "
            << (table.columns_strictly_decreasing() ? "yes" : "no") << "\n";
  const bool ok = table.max_rel_dev() <= 0.15 && table.columns_strictly_decreasing();
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& config_path, const std::string& report_path) {
  const lanesim::RunConfig config = lanesim::parse_config(config_path);
  const std::vector<lanesim::CheckResult> checks = lanesim::verify_run(config);

  nlohmann::json report = nlohmann::json::array();
  for (const lanesim::CheckResult& c : checks) {
    report.push_back({{"check_name", c.name},
                      {"max_violation", c.max_violation},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"hard", c.hard}});
    std::cout << (c.pass ? "PASS" : (c.hard ? "FAIL" : "WARN")) << "  " << c.name
              << "  max_violation=" << c.max_violation << "\n";
  }
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) {
      lanesim::fail(lanesim::Errc::IoError, "cannot write report to '" + report_path + "'");
    }
    f << report.dump(2) << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return lanesim::all_hard_checks_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume solver for multilane traffic with nonlocal lane-change sources"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", preset, report_path;

  CLI::App* simulate = app.add_subcommand("simulate", "Run a scenario from a config file");
  simulate->add_option("--config", config_path, "Scenario config file")->required();
  simulate->add_option("--out", out_dir, "Output directory");

  CLI::App* preset_cmd = app.add_subcommand("preset", "Run a shipped experiment preset");
  preset_cmd->add_option("--name", preset, "Preset name")
      ->required()
      ->check(CLI::IsMember(lanesim::preset_names()));
  preset_cmd->add_option("--out", out_dir, "Output directory");

  CLI::App* table1 = app.add_subcommand("table1", "Reproduce the kernel-range error sweep table");
  table1->add_option("--out", out_dir, "Output directory");

  CLI::App* verify = app.add_subcommand("verify", "Check the discrete properties of a scenario");
  verify->add_option("--config", config_path, "Scenario config file")->required();
  verify->add_option("--out", report_path, "JSON report path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return cmd_simulate(config_path, out_dir);
    if (preset_cmd->parsed()) return cmd_preset(preset, out_dir);
    if (table1->parsed()) return cmd_table1(out_dir);
    if (verify->parsed()) return cmd_verify(config_path, report_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
