#include "asccert/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "asccert/certify.hpp"
#include "asccert/construction.hpp"
#include "asccert/cuts.hpp"
#include "asccert/io.hpp"

namespace asccert {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw UsageError("failed writing '" + path + "'");
}

struct GenArgs {
  int k = 0;
  std::string format = "json";
  std::string out;
};

struct VerifyArgs {
  int k = 0;
  std::string strategy = "flow";
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  std::string out;
  int max_nodes = BruteForceOptions{}.max_nodes;
  unsigned threads = 1;
};

struct ReduceArgs {
  int k = 0;
  bool trace = false;
  std::string out;
};

struct ExportArgs {
  int k = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const Instance inst = build_instance(a.k);
  if (a.format == "json") {
    emit(a.out, instance_to_json(inst).dump(2) + "\n", out);
  } else if (a.format == "dot-capgraph") {
    emit(a.out, to_dot(inst, DotKind::CapGraph), out);
  } else {
    emit(a.out, to_dot(inst, DotKind::Links), out);
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  const Instance inst = build_instance(a.k);

  RunInfo info;
  info.strategy = a.strategy;
  std::optional<CutFamily> brute;
  std::optional<CutFamily> flow;
  if (a.strategy == "brute" || a.strategy == "both") {
    if (inst.n > a.max_nodes) {
      throw UsageError("brute-force enumeration needs n <= " + std::to_string(a.max_nodes) +
                       " but k = " + std::to_string(a.k) + " has n = " + std::to_string(inst.n) +
                       "; use --strategy flow or raise --max-nodes");
    }
    brute = enumerate_bruteforce(inst.graph, {a.max_nodes, a.threads});
  }
  if (a.strategy == "flow" || a.strategy == "both") flow = enumerate_flow(inst.graph);
  if (brute && flow) info.strategies_agree = *brute == *flow;
  const CutFamily& family = flow ? *flow : *brute;

  if (a.trials > 0) {
    const CutFamily probe = karger_probe(inst.graph, a.trials, a.seed);
    info.probe_ran = true;
    info.probe_trials = a.trials;
    info.probe_seed = a.seed;
    info.probe_found = probe.size();
    info.probe_ok = probe.subset_of(family);
  }

  CertifiedRun run = certify(inst, family);
  if (!info.strategies_agree) run.certificate.failures.push_back("brute and flow families differ");
  if (!info.probe_ok) run.certificate.failures.push_back("probe found a cut outside the family");
  info.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  emit(a.out, certificate_to_json(run.certificate, &run.reduction, info).dump(2) + "\n", out);

  const auto& c = run.certificate;
  const bool ok = c.is_basic && c.family_exact && c.reduction_ok.value_or(false) &&
                  info.strategies_agree && info.probe_ok;
  if (!ok) {
    err << "verification failed: "
        << (c.failures.empty() ? std::string("unknown verdict") : c.failures.front()) << "\n";
    return kExitCertificationFailure;
  }
  err << "k = " << a.k << ": x* is a basic feasible solution, max coordinate "
      << c.max_coordinate << "\n";
  return kExitOk;
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const Instance inst = build_instance(a.k);
  const ReductionResult red = full_reduction(inst);
  if (a.trace) {
    Json doc;
    doc["k"] = inst.k;
    doc["ok"] = red.ok;
    doc["det_reduced"] = red.det_reduced.str();
    Json traces = Json::array();
    for (const auto& t : red.traces) traces.push_back(trace_to_json(t));
    doc["traces"] = std::move(traces);
    doc["failures"] = red.failures;
    emit(a.out, doc.dump(2) + "\n", out);
  } else {
    emit(a.out, reduction_report(inst, red), out);
  }
  return red.ok ? kExitOk : kExitCertificationFailure;
}

int cmd_export_lp(const ExportArgs& a, std::ostream& out) {
  emit(a.out, to_lp(build_instance(a.k)), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and certify the small-cut cover LP counterexample", "asccert"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write the instance as JSON or DOT");
  gen_cmd->add_option("-k", gen.k, "Even k >= 4")->required();
  gen_cmd->add_option("--format", gen.format, "json | dot-capgraph | dot-links")
      ->check(CLI::IsMember({"json", "dot-capgraph", "dot-links"}));
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Enumerate small cuts and certify x*");
  ver_cmd->add_option("-k", ver.k, "Even k >= 4")->required();
  ver_cmd->add_option("--strategy", ver.strategy, "brute | flow | both")
      ->check(CLI::IsMember({"brute", "flow", "both"}));
  ver_cmd->add_option("--trials", ver.trials, "Random contraction trials (0 = skip)");
  ver_cmd->add_option("--seed", ver.seed, "Seed for the contraction probe");
  ver_cmd->add_option("--max-nodes", ver.max_nodes, "Brute-force node guard");
  ver_cmd->add_option("--threads", ver.threads, "Brute-force worker threads")
      ->check(CLI::PositiveNumber);
  ver_cmd->add_option("--out", ver.out, "Certificate path (default stdout)");

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce", "Replay the Q-row reduction");
  red_cmd->add_option("-k", red.k, "Even k >= 4")->required();
  red_cmd->add_flag("--trace", red.trace, "Emit the reduction traces as JSON");
  red_cmd->add_option("--out", red.out, "Output path (default stdout)");

  ExportArgs exp;
  auto* exp_cmd = app.add_subcommand("export-lp", "Write the cover LP in lp_solve format");
  exp_cmd->add_option("-k", exp.k, "Even k >= 4")->required();
  exp_cmd->add_option("--out", exp.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*ver_cmd) return cmd_verify(ver, out, err);
    if (*red_cmd) return cmd_reduce(red, out);
    if (*exp_cmd) return cmd_export_lp(exp, out);
  } catch (const InvalidK& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EnumerationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace asccert
