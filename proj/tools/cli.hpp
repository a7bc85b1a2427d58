// Copyright 2026 The stochgame Authors.
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

#ifndef STOCHGAME_TOOLS_CLI_HPP_
#define STOCHGAME_TOOLS_CLI_HPP_

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace stochgame::cli {

// Everything a run depends on. Serialized verbatim into manifest.json.
struct RunConfig {
  std::string command;
  std::string game_path;  // exactly one of game_path / corpus
  std::string corpus;
  std::vector<std::size_t> n_grid;
  std::vector<double> lambda_grid;
  std::vector<double> t_grid;
  std::vector<double> vstar_grid;
  std::string block = "auto";  // "auto" or an integer block length
  std::string mu_file;
  std::string initial_state;  // state label; empty means the first state
  double tol = 1e-8;
  std::size_t max_iter = 0;  // value-iteration cap; 0 means the default
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "csv";
  // gen only
  std::size_t states = 2;
  std::size_t actions1 = 2;
  std::size_t actions2 = 2;
};

struct OutputFile {
  std::string name;  // relative to out_dir
  std::string content;
};

struct Report {
  std::vector<OutputFile> files;
};

std::vector<double> default_t_grid();    // 0.1, 0.2, ..., 0.9
std::vector<double> default_vstar_grid();  // 1e-1 .. 1e-4

// Throws InputError on an invalid configuration.
void validate(const RunConfig& config);

Report cmd_values(const RunConfig& config);
Report cmd_adapted(const RunConfig& config);
Report cmd_curve(const RunConfig& config);
Report cmd_certify(const RunConfig& config);
Report cmd_gen(const RunConfig& config);
Report run_command(const RunConfig& config);

nlohmann::ordered_json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& doc);

// Runs the command, writes its files plus manifest.json into out_dir.
void execute(const RunConfig& config);

// Full command-line entry point. Returns the process exit code: 0 ok,
// 2 input error, 3 convergence failure, 1 replay mismatch or internal error.
int run(int argc, char** argv);

}  // namespace stochgame::cli

#endif  // STOCHGAME_TOOLS_CLI_HPP_
