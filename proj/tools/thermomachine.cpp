// Copyright 2026 The thermomachine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// thermomachine: command-line driver for scenario sweeps and presets.
//
//   thermomachine <steady|transient|cost|heat|noisy|montecarlo|verify|preset>
//                 [--config FILE] [--set key=value]... [--out FILE]
//                 [--format csv|json] [--seed S]
//
// Exit status: 0 success, 1 usage error, 2 verification failure, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thermomachine.hpp"

namespace tmc = thermomachine;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

constexpr const char* kOutputDirVariable = "THERMOMACHINE_OUTPUT_DIR";

struct CommonOptions {
  std::string config_file;
  std::vector<std::string> assignments;
  std::string out;
  std::string format;
  std::string seed;
  std::string preset_name;
};

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_file, "JSON object of parameter overrides");
  cmd->add_option("--set", opt.assignments, "Parameter override key=value (repeatable)")
      ->allow_extra_args(false);
  cmd->add_option("--out", opt.out, "Output file (default: standard output)");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", opt.seed, "Master seed, decimal or 0x-prefixed hex");
}

nlohmann::json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tmc::IoError("cannot open config '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw tmc::UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

tmc::ExportFormat choose_format(const CommonOptions& opt) {
  if (opt.format == "json") return tmc::ExportFormat::json;
  if (opt.format == "csv") return tmc::ExportFormat::csv;
  return fs::path(opt.out).extension() == ".json" ? tmc::ExportFormat::json : tmc::ExportFormat::csv;
}

/// Destination path, or nullopt for standard output.
std::optional<fs::path> destination(const CommonOptions& opt, const tmc::Scenario& s,
                                    tmc::ExportFormat format) {
  const char* dir = std::getenv(kOutputDirVariable);
  const bool have_dir = dir != nullptr && *dir != '\0';
  if (!opt.out.empty()) {
    fs::path out(opt.out);
    if (out.is_relative() && have_dir) out = fs::path(dir) / out;
    return out;
  }
  if (!have_dir) return std::nullopt;
  return fs::path(dir) / (s.name + (format == tmc::ExportFormat::json ? ".json" : ".csv"));
}

int run(const std::string& command, const CommonOptions& opt) {
  tmc::Scenario s;
  if (command == "preset") {
    s = tmc::preset(opt.preset_name);
  } else {
    s.kind = tmc::parse_kind(command);
    s.name = command;
  }
  if (!opt.config_file.empty()) tmc::apply_config_json(s, read_config(opt.config_file));
  for (const std::string& a : opt.assignments) tmc::set_assignment(s, a);
  if (!opt.seed.empty()) s.seed = tmc::parse_seed(opt.seed);

  const tmc::ResultTable table = tmc::run_scenario(s);
  const tmc::ExportFormat format = choose_format(opt);
  if (const auto path = destination(opt, s, format)) {
    tmc::export_table(table, format, path->string());
  } else {
    std::cout << tmc::serialize(table, format);
    std::cout.flush();
    if (!std::cout) throw tmc::IoError("write to standard output failed");
  }

  if (s.kind == tmc::ScenarioKind::verify && !tmc::verification_passed(table)) {
    std::cerr << "thermomachine: verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collisional thermometric machine: sweeps, presets and self-checks"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(tmc::kArtifactVersion));

  CommonOptions opt;
  const std::vector<std::pair<std::string, std::string>> kinds{
      {"steady", "Steady-state SNR against temperature"},
      {"transient", "Transient SNR against the number of collisions"},
      {"cost", "Machine SNR against thermal-probe and sample-bound baselines"},
      {"heat", "Heat exchanged with the sample and the ancilla bath"},
      {"noisy", "Steady SNR with a miscalibrated ancilla temperature"},
      {"montecarlo", "Maximum-likelihood estimation study"},
      {"verify", "Run the built-in consistency checks"},
  };
  for (const auto& [name, help] : kinds) add_common_options(app.add_subcommand(name, help), opt);

  std::string known;
  for (const auto& n : tmc::preset_names()) known += (known.empty() ? "" : ", ") + n;
  CLI::App* preset_cmd = app.add_subcommand("preset", "Run a built-in scenario (" + known + ")");
  preset_cmd->add_option("name", opt.preset_name, "Preset name")->required();
  add_common_options(preset_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const tmc::UsageError& e) {
    std::cerr << "thermomachine: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tmc::IoError& e) {
    std::cerr << "thermomachine: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "thermomachine: " << e.what() << "\n";
    return kExitUsage;
  }
}
