#include "cli/run_config.hpp"

#include <fstream>

#include "unison/error.hpp"

namespace unison::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::Config, msg); }

template <typename T>
T field(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    bad(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key, T{});
}

Value parse_value(const json& v) {
  if (v.is_string() && (v == "inf" || v == "infinity")) return kInfinity;
  if (!v.is_number_integer()) bad("register values must be integers or \"inf\"");
  return v.get<Value>();
}

Graph parse_graph_field(const json& j, const std::filesystem::path& base_dir, std::string& label) {
  if (!j.is_object()) bad("'graph' must be an object");
  if (j.contains("family")) {
    const auto family = j.at("family").get<std::string>();
    const auto n = field<std::size_t>(j, "n", 0);
    label = family + "-" + std::to_string(n);
    return families::by_name(family, n, field<std::uint64_t>(j, "seed", 0));
  }
  if (j.contains("file")) {
    std::filesystem::path path = j.at("file").get<std::string>();
    if (path.is_relative()) path = base_dir / path;
    std::ifstream in(path);
    if (!in) bad("cannot open graph file " + path.string());
    label = path.filename().string();
    return read_edge_list(in);
  }
  if (j.contains("edges")) {
    label = "inline";
    return graph_from_json(j);
  }
  bad("'graph' needs one of 'family', 'file' or 'edges'");
}

TaskSpec parse_task(const json& j, const Graph& g, Clock rho_default) {
  TaskSpec task;
  task.kind = task_kind_from_string(field<std::string>(j, "kind", "global-infimum"));
  const auto op_name = field<std::string>(j, "op", "min");
  task.op = operators::by_name(op_name);
  task.rho = field<std::size_t>(j, "rho", static_cast<std::size_t>(rho_default));
  if (!j.contains("inputs")) bad("task needs 'inputs'");
  for (const json& v : j.at("inputs")) task.inputs.push_back(parse_value(v));
  if (task.inputs.size() != g.size()) {
    bad("task has " + std::to_string(task.inputs.size()) + " inputs for " +
        std::to_string(g.size()) + " processes");
  }
  if (task.kind == TaskKind::ROperator) {
    if (op_name != "min-plus" && op_name != "min") {
      bad("r-operator tasks support the min-plus system only");
    }
    EdgeWeights weights;
    for (const json& w : j.value("weights", json::array())) {
      if (!w.is_array() || w.size() != 3) bad("weights are [from, to, w] triples");
      weights[{w[0].get<Process>(), w[1].get<Process>()}] = w[2].get<Value>();
    }
    task.rsys = min_plus(g, weights);
  }
  return task;
}

}  // namespace

json params_json(const ProtocolParams& params) {
  return {{"K", params.phases},
          {"alpha", params.alpha},
          {"delta", params.delta},
          {"rho", params.rho},
          {"period", params.period()}};
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  try {
    for (const json& e : j.at("edges")) edges.push_back({e.at(0).get<Process>(), e.at(1).get<Process>()});
    return parse_graph(j.at("n").get<std::size_t>(), edges);
  } catch (const json::exception& e) {
    bad(std::string("graph: ") + e.what());
  }
}

RunConfig parse_config(const json& j, const std::filesystem::path& base_dir,
                       const CliOverrides& cli) {
  if (!j.is_object()) bad("config must be a JSON object");
  RunConfig cfg;
  cfg.graph = parse_graph_field(j.value("graph", json::object()), base_dir, cfg.graph_label);

  const json p = j.value("params", json::object());
  cfg.overrides.phases = optional_field<Clock>(p, "K");
  cfg.overrides.alpha = optional_field<Clock>(p, "alpha");
  cfg.overrides.delta = optional_field<Clock>(p, "delta");
  cfg.overrides.rho = optional_field<Clock>(p, "rho");
  cfg.overrides.unsafe = field<bool>(p, "unsafe", false);

  const json d = j.value("daemon", json::object());
  cfg.daemon.kind = daemon_kind_from_string(field<std::string>(d, "kind", "random-subset"));
  cfg.daemon.seed = field<std::uint64_t>(d, "seed", 1);
  cfg.daemon.bias = field<double>(d, "bias", 0.5);
  cfg.daemon.victim = field<Process>(d, "victim", 0);
  if (cfg.daemon.kind == DaemonKind::Replay) bad("replay daemons are driven by 'verify --trace'");
  if (cfg.daemon.bias <= 0.0 || cfg.daemon.bias > 1.0) bad("daemon bias must be in (0, 1]");

  const json init = j.value("initial", json("random"));
  if (init.is_string()) {
    if (init == "in-unison") {
      cfg.initial.kind = InitialSpec::Kind::InUnison;
    } else if (init != "random") {
      bad("initial must be \"random\", \"in-unison\" or an object");
    }
  } else if (init.contains("clocks")) {
    cfg.initial.kind = InitialSpec::Kind::Explicit;
    cfg.initial.clocks = init.at("clocks").get<std::vector<Clock>>();
  } else {
    cfg.initial.seed = field<std::uint64_t>(init, "random", 1);
  }

  const json limits = j.value("limits", json::object());
  cfg.max_steps = field<std::size_t>(limits, "max_steps", cfg.max_steps);
  cfg.phases = field<std::size_t>(limits, "phases", cfg.phases);

  if (cli.seed) {
    cfg.daemon.seed = *cli.seed;
    cfg.initial.seed = *cli.seed;
  }
  if (cli.max_steps) cfg.max_steps = *cli.max_steps;

  Clock min_delta = 1;
  if (j.contains("task") && !j.at("task").is_null()) {
    const Clock rho = cfg.overrides.rho.value_or(1);
    cfg.task = parse_task(j.at("task"), cfg.graph, rho);
    min_delta = required_delta(cfg.graph, *cfg.task);
  }
  cfg.params = resolve_params(cfg.graph, cfg.overrides, min_delta);

  if (cfg.initial.kind == InitialSpec::Kind::Explicit) {
    if (cfg.initial.clocks.size() != cfg.graph.size()) {
      bad("initial clocks: expected " + std::to_string(cfg.graph.size()) + " values");
    }
    const IncSystem sys = cfg.params.clock();
    for (Clock c : cfg.initial.clocks) {
      if (!sys.contains(c)) bad("initial clock " + std::to_string(c) + " outside the domain");
    }
  }
  if (cfg.daemon.victim >= cfg.graph.size()) bad("daemon victim out of range");

  if (j.contains("stats")) {
    const json s = j.at("stats");
    cfg.stats.families = field<std::vector<std::string>>(s, "families", cfg.stats.families);
    cfg.stats.n_min = field<std::size_t>(s, "n_min", cfg.stats.n_min);
    cfg.stats.n_max = field<std::size_t>(s, "n_max", cfg.stats.n_max);
    cfg.stats.seeds = field<std::size_t>(s, "seeds", cfg.stats.seeds);
    if (s.contains("daemons")) {
      cfg.stats.daemons.clear();
      for (const auto& name : s.at("daemons").get<std::vector<std::string>>()) {
        cfg.stats.daemons.push_back(daemon_kind_from_string(name));
      }
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, const CliOverrides& cli) {
  std::ifstream in(path);
  if (!in) bad("cannot open config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
  return parse_config(j, path.parent_path(), cli);
}

Daemon make_daemon(const DaemonSpec& spec) {
  switch (spec.kind) {
    case DaemonKind::Synchronous: return Daemon::synchronous();
    case DaemonKind::RandomSubset: return Daemon::random_subset(spec.seed, spec.bias);
    case DaemonKind::SingleMin: return Daemon::single_min();
    case DaemonKind::SingleRandom: return Daemon::single_random(spec.seed);
    case DaemonKind::Starving: return Daemon::starving(spec.victim, spec.seed);
    case DaemonKind::Replay: break;
  }
  bad("daemon kind cannot be built from a config");
}

Configuration make_initial(const RunConfig& cfg) {
  switch (cfg.initial.kind) {
    case InitialSpec::Kind::InUnison: return in_unison(cfg.graph.size());
    case InitialSpec::Kind::Explicit: return from_clocks(cfg.initial.clocks);
    case InitialSpec::Kind::Random: break;
  }
  return random_configuration(cfg.graph.size(), cfg.params.clock(), cfg.initial.seed);
}

}  // namespace unison::cli
