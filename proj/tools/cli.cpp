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

#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "stochgame/adapted.hpp"
#include "stochgame/corpus.hpp"
#include "stochgame/errors.hpp"
#include "stochgame/evaluation.hpp"
#include "stochgame/game.hpp"
#include "stochgame/kernels.hpp"
#include "stochgame/parallel.hpp"
#include "stochgame/shapley.hpp"

namespace stochgame::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kThreadsEnv = "STOCHGAME_THREADS";

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 0xF];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A result table, rendered either as versioned CSV or as JSON with the same
// columns.
using Cell = std::variant<double, std::size_t, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render_csv(const Table& t) {
  std::string out = "# stochgame." + t.name + " v1\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              out += format_double(v);
            } else if constexpr (std::is_same_v<V, std::size_t>) {
              out += std::to_string(v);
            } else {
              out += v;
            }
          },
          row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& t) {
  nlohmann::ordered_json doc;
  doc["schema"] = "stochgame." + t.name + ".v1";
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit([&](const auto& v) { obj[t.columns[c]] = v; }, row[c]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

OutputFile render(const Table& t, const std::string& format) {
  if (format == "json") return {t.name + ".json", render_json(t)};
  return {t.name + ".csv", render_csv(t)};
}

StochasticGame load_config_game(const RunConfig& config) {
  if (!config.game_path.empty()) return load_game_file(config.game_path);
  return corpus::by_name(config.corpus).game;
}

std::size_t initial_state_index(const StochasticGame& game, const RunConfig& config) {
  return config.initial_state.empty() ? 0 : game.state_index(config.initial_state);
}

std::optional<MuSequence> load_mu(const RunConfig& config) {
  if (config.mu_file.empty()) return std::nullopt;
  return MuSequence::from_json(read_file(config.mu_file));
}

std::size_t parse_block(const std::string& text) {
  std::size_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw InputError("--a must be 'auto' or a positive integer, got '" + text + "'");
  }
  return value;
}

std::size_t resolve_block(const RunConfig& config, std::size_t n,
                          const std::optional<MuSequence>& mu) {
  if (config.block != "auto") return parse_block(config.block);
  if (mu) {
    try {
      return select_block_length(n, *mu);
    } catch (const NotReadyError&) {
      // Below the threshold horizon; fall through to the default.
    }
  }
  return default_block_length(n);
}

template <typename T>
bool strictly_monotone(const std::vector<T>& v, bool increasing) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (increasing ? !(v[k] > v[k - 1]) : !(v[k] < v[k - 1])) return false;
  }
  return true;
}

std::optional<std::size_t> max_iter_of(const RunConfig& config) {
  if (config.max_iter == 0) return std::nullopt;
  return config.max_iter;
}

LimitValueEstimate estimate_vstar(const StochasticGame& game, const RunConfig& config) {
  const auto grid = config.vstar_grid.empty() ? default_vstar_grid() : config.vstar_grid;
  return limit_value_estimate(game, grid, config.tol, max_iter_of(config));
}

std::vector<double> t_grid_of(const RunConfig& config) {
  return config.t_grid.empty() ? default_t_grid() : config.t_grid;
}

Table vstar_table(const StochasticGame& game, const LimitValueEstimate& est) {
  Table t{"vstar", {"state", "value", "dispersion"}, {}};
  for (std::size_t s = 0; s < game.num_states(); ++s) {
    t.rows.push_back({game.states()[s], est.value[s], est.dispersion});
  }
  return t;
}

}  // namespace

std::vector<double> default_t_grid() {
  std::vector<double> out;
  for (int k = 1; k <= 9; ++k) out.push_back(k / 10.0);
  return out;
}

std::vector<double> default_vstar_grid() { return {1e-1, 1e-2, 1e-3, 1e-4}; }

void validate(const RunConfig& config) {
  static const std::vector<std::string> commands = {"values", "adapted", "curve",
                                                    "certify", "gen"};
  if (std::find(commands.begin(), commands.end(), config.command) == commands.end()) {
    throw InputError("unknown command '" + config.command + "'");
  }
  if (config.format != "csv" && config.format != "json") {
    throw InputError("--format must be csv or json");
  }
  if (!(config.tol > 0.0)) throw InputError("--tol must be positive");
  if (config.command == "gen") {
    if (config.corpus.empty() &&
        (config.states < 1 || config.actions1 < 1 || config.actions2 < 1)) {
      throw InputError("gen sizes must be at least 1");
    }
    return;
  }
  if (config.game_path.empty() == config.corpus.empty()) {
    throw InputError("give exactly one of --game or --corpus");
  }
  if (!strictly_monotone(config.n_grid, true)) {
    throw InputError("--n-grid must be strictly increasing");
  }
  for (std::size_t n : config.n_grid) {
    if (n < 1) throw InputError("horizons must be at least 1");
  }
  if (!strictly_monotone(config.lambda_grid, false)) {
    throw InputError("--lambda-grid must be strictly decreasing");
  }
  if (!strictly_monotone(config.t_grid, true)) {
    throw InputError("--t-grid must be strictly increasing");
  }
  if (!strictly_monotone(config.vstar_grid, false)) {
    throw InputError("--vstar-grid must be strictly decreasing");
  }
  if (config.command == "values" && config.n_grid.empty() && config.lambda_grid.empty()) {
    throw InputError("values needs --n/--n-grid or --lambda/--lambda-grid");
  }
  if (config.command != "values" && config.n_grid.empty()) {
    throw InputError(config.command + " needs --n or --n-grid");
  }
  if (config.block != "auto") parse_block(config.block);
}

Report cmd_values(const RunConfig& config) {
  const StochasticGame game = load_config_game(config);
  Table values{"values", {"kind", "param", "state", "value"}, {}};
  Report report;
  if (!config.lambda_grid.empty()) {
    std::vector<DiscountedSolution> sols;
    std::optional<LimitValueEstimate> limit;
    if (config.lambda_grid.back() <= 1e-3) {
      limit = limit_value_estimate(game, config.lambda_grid, config.tol, max_iter_of(config));
      sols = limit->solutions;
    } else {
      sols.resize(config.lambda_grid.size());
      parallel_for_each_index(sols.size(), [&](std::size_t k) {
        sols[k] = discounted_value(game, config.lambda_grid[k], config.tol,
                                   max_iter_of(config));
      });
    }
    for (const auto& sol : sols) {
      for (std::size_t s = 0; s < game.num_states(); ++s) {
        values.rows.push_back({std::string("lambda"), sol.lambda, game.states()[s],
                               sol.value[s]});
      }
    }
    if (limit) {
      Table t{"limit", {"state", "value", "dispersion"}, {}};
      for (std::size_t s = 0; s < game.num_states(); ++s) {
        t.rows.push_back({game.states()[s], limit->value[s], limit->dispersion});
      }
      report.files.push_back(render(t, config.format));
    }
  }
  if (!config.n_grid.empty()) {
    const FiniteHorizonSolution fin = finite_value(game, config.n_grid.back());
    for (std::size_t n : config.n_grid) {
      for (std::size_t s = 0; s < game.num_states(); ++s) {
        values.rows.push_back({std::string("n"), static_cast<double>(n),
                               game.states()[s], fin.values[n - 1][s]});
      }
    }
  }
  report.files.insert(report.files.begin(), render(values, config.format));
  return report;
}

Report cmd_adapted(const RunConfig& config) {
  const StochasticGame game = load_config_game(config);
  const auto mu = load_mu(config);
  Table table{"adapted",
              {"n", "a", "p", "epsilon", "player1_gap", "player2_gap"},
              {}};
  auto summaries = nlohmann::ordered_json::array();
  for (std::size_t n : config.n_grid) {
    const std::size_t a = resolve_block(config, n, mu);
    const AdaptedProfile profile = adapted_profile(game, n, a, config.tol, max_iter_of(config));
    const ValueFunction vn = finite_value(game, n).value();
    const OptimalityCertificate cert =
        certify_epsilon_optimality(game, profile.sigma, profile.rho, n, vn);
    table.rows.push_back({n, a, profile.schedule.p, cert.epsilon,
                          cert.player1_gap, cert.player2_gap});
    summaries.push_back(profile_summary(profile));
  }
  Report report;
  report.files.push_back(render(table, config.format));
  report.files.push_back({"profiles.json", summaries.dump(1) + "\n"});
  return report;
}

Report cmd_curve(const RunConfig& config) {
  const StochasticGame game = load_config_game(config);
  const auto mu = load_mu(config);
  const std::size_t start = initial_state_index(game, config);
  const auto t_grid = t_grid_of(config);
  const LimitValueEstimate vstar = estimate_vstar(game, config);
  const double v0 = vstar.value[start];

  Table curve{"curve", {"n", "a", "t", "stage", "cumulative", "t_vstar", "deviation"}, {}};
  Table summary{"curve_summary",
                {"n", "a", "p", "sup_deviation", "sup_drift", "drift_target"},
                {}};
  for (std::size_t n : config.n_grid) {
    const std::size_t a = resolve_block(config, n, mu);
    const AdaptedProfile profile = adapted_profile(game, n, a, config.tol, max_iter_of(config));
    const PayoffTrajectory traj =
        trajectory(game, profile.sigma, profile.rho, start, n);
    const PayoffCurve pc = constant_payoff_curve(traj, t_grid, vstar.value);
    for (const auto& pt : pc.points) {
      curve.rows.push_back({n, a, pt.t, pt.stage, pt.cumulative, pt.target, pt.deviation});
    }
    const DriftReport drift =
        value_drift_diagnostic(game, profile, start, t_grid, vstar.value);
    summary.rows.push_back({n, a, profile.schedule.p, pc.sup_deviation,
                            drift.sup_drift, drift.global_target});
  }
  Report report;
  report.files.push_back(render(curve, config.format));
  report.files.push_back(render(summary, config.format));
  report.files.push_back(render(vstar_table(game, vstar), config.format));

  if (!config.lambda_grid.empty()) {
    Table disc{"discounted_curve",
               {"lambda", "t", "phi", "cumulative", "t_vstar", "deviation"},
               {}};
    for (double lambda : config.lambda_grid) {
      if (!(lambda < 1.0)) throw InputError("discounted curve needs lambda < 1");
      const DiscountedSolution sol = discounted_value(game, lambda, config.tol, max_iter_of(config));
      for (double t : t_grid) {
        const double c = discounted_cumulative_payoff(game, sol.x, sol.y, start, lambda, t);
        disc.rows.push_back({lambda, t, phi(lambda, t), c, t * v0, c - t * v0});
      }
    }
    report.files.push_back(render(disc, config.format));
  }
  return report;
}

Report cmd_certify(const RunConfig& config) {
  const StochasticGame game = load_config_game(config);
  const auto mu = load_mu(config);
  const std::size_t start = initial_state_index(game, config);
  const auto t_grid = t_grid_of(config);
  const LimitValueEstimate vstar = estimate_vstar(game, config);
  Table table{"certify",
              {"n", "a", "p", "epsilon", "player1_gap", "player2_gap", "sup_drift",
               "within_block_max", "within_block_target", "global_max",
               "global_target"},
              {}};
  for (std::size_t n : config.n_grid) {
    const std::size_t a = resolve_block(config, n, mu);
    const AdaptedProfile profile = adapted_profile(game, n, a, config.tol, max_iter_of(config));
    const OptimalityCertificate cert =
        certify_epsilon_optimality(game, profile.sigma, profile.rho, n);
    const DriftReport drift =
        value_drift_diagnostic(game, profile, start, t_grid, vstar.value);
    table.rows.push_back({n, a, profile.schedule.p, cert.epsilon, cert.player1_gap,
                          cert.player2_gap, drift.sup_drift, drift.within_block_max,
                          drift.within_block_target, drift.global_max,
                          drift.global_target});
  }
  Report report;
  report.files.push_back(render(table, config.format));
  report.files.push_back(render(vstar_table(game, vstar), config.format));
  return report;
}

Report cmd_gen(const RunConfig& config) {
  const corpus::CorpusEntry entry =
      config.corpus.empty()
          ? corpus::random_game(config.states, config.actions1, config.actions2,
                                config.seed)
          : corpus::by_name(config.corpus);
  return {{{"game.json", serialize_game(entry.game)}}};
}

Report run_command(const RunConfig& config) {
  validate(config);
  if (config.command == "values") return cmd_values(config);
  if (config.command == "adapted") return cmd_adapted(config);
  if (config.command == "curve") return cmd_curve(config);
  if (config.command == "certify") return cmd_certify(config);
  return cmd_gen(config);
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["game_path"] = c.game_path;
  j["corpus"] = c.corpus;
  j["n_grid"] = c.n_grid;
  j["lambda_grid"] = c.lambda_grid;
  j["t_grid"] = c.t_grid;
  j["vstar_grid"] = c.vstar_grid;
  j["block"] = c.block;
  j["mu_file"] = c.mu_file;
  j["initial_state"] = c.initial_state;
  j["tol"] = c.tol;
  j["max_iter"] = c.max_iter;
  j["seed"] = c.seed;
  j["out_dir"] = c.out_dir;
  j["format"] = c.format;
  j["states"] = c.states;
  j["actions1"] = c.actions1;
  j["actions2"] = c.actions2;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    c.command = j.at("command").get<std::string>();
    c.game_path = j.at("game_path").get<std::string>();
    c.corpus = j.at("corpus").get<std::string>();
    c.n_grid = j.at("n_grid").get<std::vector<std::size_t>>();
    c.lambda_grid = j.at("lambda_grid").get<std::vector<double>>();
    c.t_grid = j.at("t_grid").get<std::vector<double>>();
    c.vstar_grid = j.at("vstar_grid").get<std::vector<double>>();
    c.block = j.at("block").get<std::string>();
    c.mu_file = j.at("mu_file").get<std::string>();
    c.initial_state = j.at("initial_state").get<std::string>();
    c.tol = j.at("tol").get<double>();
    c.max_iter = j.at("max_iter").get<std::size_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.out_dir = j.at("out_dir").get<std::string>();
    c.format = j.at("format").get<std::string>();
    c.states = j.at("states").get<std::size_t>();
    c.actions1 = j.at("actions1").get<std::size_t>();
    c.actions2 = j.at("actions2").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad manifest config: ") + e.what());
  }
  return c;
}

namespace {

nlohmann::ordered_json input_hashes(const RunConfig& config) {
  auto inputs = nlohmann::ordered_json::array();
  for (const std::string* path : {&config.game_path, &config.mu_file}) {
    if (path->empty()) continue;
    inputs.push_back({{"path", *path}, {"sha256", sha256_hex(read_file(*path))}});
  }
  return inputs;
}

void write_outputs(const RunConfig& config, const Report& report) {
  const fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory '" + config.out_dir + "'");
  auto outputs = nlohmann::ordered_json::array();
  for (const auto& file : report.files) {
    std::ofstream out(dir / file.name, std::ios::binary);
    if (!out) throw InputError("cannot write '" + (dir / file.name).string() + "'");
    out << file.content;
    outputs.push_back({{"file", file.name}, {"sha256", sha256_hex(file.content)}});
  }
  nlohmann::ordered_json manifest;
  manifest["tool"] = "stochgame";
  manifest["version"] = STOCHGAME_VERSION;
  manifest["config"] = config_to_json(config);
  manifest["inputs"] = input_hashes(config);
  manifest["outputs"] = std::move(outputs);
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  out << manifest.dump(1) << "\n";
}

// Re-runs a manifest and checks every output hash. Returns the number of
// mismatching files.
std::size_t replay(const std::string& manifest_path, const std::string& out_dir) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed manifest: ") + e.what());
  }
  RunConfig config = config_from_json(manifest.at("config"));
  if (!out_dir.empty()) config.out_dir = out_dir;
  for (const auto& input : manifest.at("inputs")) {
    const auto path = input.at("path").get<std::string>();
    if (sha256_hex(read_file(path)) != input.at("sha256").get<std::string>()) {
      throw InputError("input '" + path + "' changed since the manifest was written");
    }
  }
  const Report report = run_command(config);
  write_outputs(config, report);
  std::size_t mismatches = 0;
  for (const auto& expected : manifest.at("outputs")) {
    const auto name = expected.at("file").get<std::string>();
    auto it = std::find_if(report.files.begin(), report.files.end(),
                           [&](const OutputFile& f) { return f.name == name; });
    if (it == report.files.end() ||
        sha256_hex(it->content) != expected.at("sha256").get<std::string>()) {
      std::cerr << "replay mismatch: " << name << "\n";
      ++mismatches;
    }
  }
  if (manifest.at("outputs").size() != report.files.size()) ++mismatches;
  return mismatches;
}

int report_error(const char* kind, const std::string& message, int code) {
  nlohmann::ordered_json err;
  err["error"] = kind;
  err["message"] = message;
  err["exit_code"] = code;
  std::cerr << err.dump() << "\n";
  return code;
}

void add_game_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--game", c.game_path, "Game file (JSON)");
  sub->add_option("--corpus", c.corpus, "Corpus game name");
  sub->add_option("--tol", c.tol, "Discounted-value accuracy");
  sub->add_option("--max-iter", c.max_iter, "Value-iteration cap (0: automatic)");
  sub->add_option("--out-dir", c.out_dir, "Output directory");
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_horizon_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n,--n-grid", c.n_grid, "Horizon(s), comma separated")
      ->delimiter(',');
}

void add_profile_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--a", c.block, "Block length, or 'auto'");
  sub->add_option("--mu-file", c.mu_file, "JSON {\"mu\": [...]} for automatic block lengths");
}

void add_curve_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--t-grid", c.t_grid, "Fractions of the horizon")->delimiter(',');
  sub->add_option("--vstar-grid", c.vstar_grid, "Discounts used to estimate v*")
      ->delimiter(',');
  sub->add_option("--state", c.initial_state, "Initial state label");
}

}  // namespace

void execute(const RunConfig& config) {
  const Report report = run_command(config);
  write_outputs(config, report);
}

int run(int argc, char** argv) {
  if (const char* env = std::getenv(kThreadsEnv)) {
    kernels::set_threads(std::atoi(env));
  }
  CLI::App app{"Solver and diagnostics for finite zero-sum stochastic games"};
  app.require_subcommand(1);
  RunConfig config;
  std::string manifest_path, replay_dir;

  auto* values = app.add_subcommand("values", "n-stage and discounted values");
  add_game_options(values, config);
  add_horizon_options(values, config);
  values->add_option("--lambda,--lambda-grid", config.lambda_grid, "Discount factor(s)")
      ->delimiter(',');

  auto* adapted = app.add_subcommand("adapted", "Adapted profiles and their epsilon_n");
  add_game_options(adapted, config);
  add_horizon_options(adapted, config);
  add_profile_options(adapted, config);

  auto* curve = app.add_subcommand("curve", "Constant payoff curves");
  add_game_options(curve, config);
  add_horizon_options(curve, config);
  add_profile_options(curve, config);
  add_curve_options(curve, config);
  curve->add_option("--lambda,--lambda-grid", config.lambda_grid,
                    "Also emit the discounted curve at these discounts")
      ->delimiter(',');

  auto* certify = app.add_subcommand("certify", "Optimality and value-drift certificates");
  add_game_options(certify, config);
  add_horizon_options(certify, config);
  add_profile_options(certify, config);
  add_curve_options(certify, config);

  auto* gen = app.add_subcommand("gen", "Emit a random or corpus game file");
  gen->add_option("--states", config.states, "Number of states");
  gen->add_option("--actions1", config.actions1, "Player 1 actions");
  gen->add_option("--actions2", config.actions2, "Player 2 actions");
  gen->add_option("--seed", config.seed, "Generator seed");
  gen->add_option("--corpus", config.corpus, "Emit a named corpus game instead");
  gen->add_option("--out-dir", config.out_dir, "Output directory");

  auto* rerun = app.add_subcommand("replay", "Re-run a manifest and verify its outputs");
  rerun->add_option("manifest", manifest_path, "Path to manifest.json")->required();
  rerun->add_option("--out-dir", replay_dir, "Write outputs here instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report_error("input", e.what(), 2);
  }

  try {
    if (rerun->parsed()) {
      const std::size_t bad = replay(manifest_path, replay_dir);
      if (bad != 0) return report_error("replay", "outputs differ from manifest", 1);
      std::cout << "replay: outputs identical\n";
      return 0;
    }
    for (auto* sub : {values, adapted, curve, certify, gen}) {
      if (sub->parsed()) config.command = sub->get_name();
    }
    execute(config);
    return 0;
  } catch (const ConvergenceError& e) {
    return report_error("convergence", e.what(), 3);
  } catch (const InputError& e) {
    return report_error("input", e.what(), 2);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), 1);
  }
}

}  // namespace stochgame::cli
