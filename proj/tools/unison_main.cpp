#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "unison/error.hpp"

namespace {

using namespace unison;
using namespace unison::cli;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Deadlock:
      return kDeadlock;
    case Errc::NotWU0:
    case Errc::NotStabilized:
    case Errc::Incomplete:
    case Errc::Truncated:
    case Errc::LiftBroken:
    case Errc::ReplayMismatch:
      return kVerificationFailed;
    default:
      return kConfigError;
  }
}

struct OutputSink {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputSink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw Error(Errc::Config, "cannot write " + path);
    stream = &file;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-stabilizing unison simulator and wave verifier"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_steps;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_path, "Output file (stdout when omitted)");
    sub->add_option("--seed", seed, "Override daemon and initial-state seeds");
    sub->add_option("--max-steps", max_steps, "Override the step limit");
  };

  auto* simulate = app.add_subcommand("simulate", "Run the protocol and write a JSON-lines trace");
  common(simulate);
  std::string summary_path;
  simulate->add_option("--summary", summary_path, "Summary file (stderr when omitted)");

  auto* verify = app.add_subcommand("verify", "Check a wavelet, wave or strong wave");
  common(verify);
  std::string kind = "wave";
  std::string segment;
  std::optional<std::size_t> wavelet_k;
  std::string trace_path;
  std::string dag_out;
  verify->add_option("--kind", kind, "wavelet | wave | strong-wave")
      ->check(CLI::IsMember({"wavelet", "wave", "strong-wave"}));
  verify->add_option("--segment", segment, "Lifted offsets k1:k2 from the base value");
  verify->add_option("--k", wavelet_k, "Wavelet radius (defaults to delta)");
  verify->add_option("--trace", trace_path, "Trace written by simulate");
  verify->add_option("--dag-out", dag_out, "Write the causal DAG as JSON");

  auto* compute = app.add_subcommand("compute", "Run the configured task against its oracle");
  common(compute);

  auto* stats = app.add_subcommand("stats", "Sweep graph families and emit CSV");
  common(stats);
  unsigned jobs = 1;
  stats->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = load_config(config_path, CliOverrides{seed, max_steps});
    OutputSink out(out_path);

    if (simulate->parsed()) {
      if (summary_path.empty()) return cmd_simulate(cfg, *out.stream, std::cerr);
      OutputSink summary(summary_path);
      return cmd_simulate(cfg, *out.stream, *summary.stream);
    }
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.kind = verify_kind_from_string(kind);
      opts.k = wavelet_k;
      if (!segment.empty()) opts.segment = parse_segment(segment);
      std::optional<Trace> trace;
      if (!trace_path.empty()) {
        std::ifstream in(trace_path);
        if (!in) throw Error(Errc::Config, "cannot open trace " + trace_path);
        trace = read_trace(in);
      }
      std::optional<OutputSink> dag;
      if (!dag_out.empty()) {
        dag.emplace(dag_out);
        opts.dag_out = dag->stream;
      }
      return cmd_verify(cfg, trace, opts, *out.stream);
    }
    if (compute->parsed()) return cmd_compute(cfg, *out.stream);
    return cmd_stats(cfg, *out.stream, jobs);
  } catch (const DeadlockError& e) {
    std::cerr << "error: " << e.what() << "\nconfiguration:";
    for (Clock c : e.configuration().clocks()) std::cerr << ' ' << c;
    std::cerr << '\n';
    return kDeadlock;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
