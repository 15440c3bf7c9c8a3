#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unison/aggregation.hpp"
#include "unison/scheduler.hpp"

namespace unison::cli {

struct DaemonSpec {
  DaemonKind kind = DaemonKind::RandomSubset;
  std::uint64_t seed = 1;
  double bias = 0.5;
  Process victim = 0;
};

struct InitialSpec {
  enum class Kind { Random, Explicit, InUnison };
  Kind kind = Kind::Random;
  std::uint64_t seed = 1;
  std::vector<Clock> clocks;
};

/// Settings for `stats`: every (family, n, seed, daemon) combination is a row.
struct StatsSpec {
  std::vector<std::string> families{"ring"};
  std::size_t n_min = 3;
  std::size_t n_max = 8;
  std::size_t seeds = 10;
  std::vector<DaemonKind> daemons{DaemonKind::Synchronous};
};

struct RunConfig {
  Graph graph = families::ring(3);
  std::string graph_label;
  ParamOverrides overrides;
  ProtocolParams params;
  DaemonSpec daemon;
  InitialSpec initial;
  std::optional<TaskSpec> task;
  std::size_t max_steps = 100000;
  std::size_t phases = 2;
  StatsSpec stats;
};

/// Command-line values that take precedence over the file.
struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_steps;
};

/// Validates and resolves parameters. `base_dir` anchors relative graph
/// files. Throws Error{Config} (or the validating module's error).
RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {},
                       const CliOverrides& cli = {});
RunConfig load_config(const std::filesystem::path& path, const CliOverrides& cli = {});

nlohmann::json params_json(const ProtocolParams& params);
nlohmann::json graph_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

Daemon make_daemon(const DaemonSpec& spec);
Configuration make_initial(const RunConfig& cfg);

}  // namespace unison::cli
