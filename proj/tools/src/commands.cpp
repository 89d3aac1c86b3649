#include "kspan_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kspan/kspan.hpp"

namespace kspan::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenConfig {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 1;
  int trials = 1000;
  std::string out;
  std::string format = "json";
};

struct SparsifyConfig {
  std::string in;
  std::string out;
  std::string report;
  std::string format = "json";
  int k = 1;
  std::uint64_t seed = 0;
  std::int64_t sample_pairs = 0;
  bool skip_validation = false;
  bool force_pipeline = false;
  bool no_timing = false;
};

struct VerifyConfig {
  std::string in;
  int k = 1;
  std::uint64_t seed = 0;
  std::int64_t sample_pairs = 0;
  bool all_pairs = false;
};

struct BenchConfig {
  std::vector<int> n{50, 100, 200};
  std::vector<int> k{2, 3};
  int trials = 5;
  std::uint64_t seed = 1;
  std::int64_t sample_pairs = 0;
  bool skip_validation = false;
  bool force_pipeline = false;
  std::string format = "csv";
  std::string out;
};

std::string read_input(const std::string& path) {
  try {
    return io::read_file(path);
  } catch (const Error& e) {
    throw IoError(e.what());
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  try {
    io::write_file(path, text);
  } catch (const Error& e) {
    throw IoError(e.what());
  }
}

std::string join(const VertexSet& s) {
  std::string r = "{";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? ", " : "") + std::to_string(s[i]);
  return r + "}";
}

// Accepts either a tournament ({"n", "bits"}) or a digraph ({"n", "arcs"}).
Digraph load_any(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (j.is_object() && j.contains("bits")) return io::tournament_from_json(text).to_digraph();
  return io::digraph_from_json(text);
}

int cmd_gen(const GenConfig& c, std::ostream& out) {
  const Tournament t = c.k > 0 ? gen_k_connected(c.n, c.k, c.seed, c.trials) : gen_random(c.n, c.seed);
  emit(c.out, c.format == "dot" ? io::tournament_to_dot(t) : io::tournament_to_json(t), out);
  return kExitOk;
}

int cmd_sparsify(const SparsifyConfig& c, std::ostream& out, std::ostream& err) {
  const Tournament t = io::tournament_from_json(read_input(c.in));
  SparsifyOptions options;
  options.skip_validation = c.skip_validation;
  options.force_pipeline = c.force_pipeline;
  if (c.sample_pairs > 0) {
    options.verifier.sample_pairs = c.sample_pairs;
    options.verifier.sample_seed = c.seed;
  }
  SparsifyResult result;
  try {
    result = sparsify(t, c.k, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotKConnected) throw;
    err << e.what() << "\n";
    return kExitFailure;
  }
  emit(c.out, c.format == "dot" ? io::digraph_to_dot(result.graph) : io::digraph_to_json(result.graph), out);
  const std::string report = report_to_json(result.report, !c.no_timing);
  if (!c.report.empty()) emit(c.report, report, out);

  const SparsifyReport& r = result.report;
  const bool within = static_cast<double>(r.arcs) <= r.bound + 1e-9;
  const bool verified = r.verified.value_or(false);
  err << "branch=" << to_string(r.branch) << " arcs=" << r.arcs << " bound=" << std::fixed
      << std::setprecision(2) << r.bound << " verification="
      << (r.verified ? (verified ? "connected" : "not_connected") : "skipped")
      << (r.verification_probabilistic ? " (probabilistic)" : "") << "\n";
  return within && verified ? kExitOk : kExitFailure;
}

int cmd_verify(const VerifyConfig& c, std::ostream& out) {
  const Digraph d = load_any(read_input(c.in));
  KConnectivityOptions options;
  if (c.all_pairs) options.family = PairFamily::kAllPairs;
  if (c.sample_pairs > 0) {
    options.sample_pairs = c.sample_pairs;
    options.sample_seed = c.seed;
  }
  const KConnectivityResult r = check_strongly_k_connected(d, c.k, options);
  const char* mode = r.probabilistic ? " (probabilistic)" : "";
  if (r.connected) {
    out << "strongly " << c.k << "-connected" << mode << "\n";
    return kExitOk;
  }
  out << "not strongly " << c.k << "-connected" << mode;
  if (r.too_few_vertices)
    out << ": fewer than " << c.k + 1 << " vertices";
  else if (r.separator)
    out << ": removing " << join(*r.separator) << " breaks strong connectivity";
  out << "\n";
  return kExitFailure;
}

double percentile(std::vector<double> xs, double q) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(xs.size())));
  return xs[std::clamp<std::size_t>(rank, 1, xs.size()) - 1];
}

int cmd_bench(const BenchConfig& c, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << "n,k,trials,branch,mean_arcs,bound,ratio,verified,p50_ms,p90_ms,max_ms\n";
  bool all_ok = true;
  for (int k : c.k)
    for (int n : c.n) {
      double arcs = 0;
      int verified = 0;
      std::vector<double> times;
      Branch branch = Branch::kSmall;
      for (int trial = 0; trial < c.trials; ++trial) {
        const Tournament t = gen_k_connected(n, k, c.seed + static_cast<std::uint64_t>(trial));
        SparsifyOptions options;
        options.skip_validation = c.skip_validation;
        options.force_pipeline = c.force_pipeline;
        if (c.sample_pairs > 0) {
          options.verifier.sample_pairs = c.sample_pairs;
          options.verifier.sample_seed = c.seed;
        }
        const SparsifyResult r = sparsify(t, k, options);
        arcs += static_cast<double>(r.report.arcs);
        verified += r.report.verified.value_or(false) ? 1 : 0;
        times.push_back(r.report.wall_time_ms);
        branch = r.report.branch;
        all_ok = all_ok && r.report.verified.value_or(false) &&
                 static_cast<double>(r.report.arcs) <= r.report.bound + 1e-9;
      }
      const double mean = c.trials > 0 ? arcs / c.trials : 0;
      const double bound = main_bound(n, k);
      const double ratio = mean / (static_cast<double>(k) * n);
      csv << n << ',' << k << ',' << c.trials << ',' << to_string(branch) << ',' << std::fixed
          << std::setprecision(2) << mean << ',' << bound << ',' << std::setprecision(4) << ratio
          << ',' << verified << ',' << std::setprecision(3) << percentile(times, 0.5) << ','
          << percentile(times, 0.9) << ',' << percentile(times, 1.0) << '\n';
      rows.push_back({{"n", n},
                      {"k", k},
                      {"trials", c.trials},
                      {"branch", std::string(to_string(branch))},
                      {"mean_arcs", mean},
                      {"bound", bound},
                      {"ratio", ratio},
                      {"verified", verified},
                      {"p50_ms", percentile(times, 0.5)},
                      {"p90_ms", percentile(times, 0.9)},
                      {"max_ms", percentile(times, 1.0)}});
    }
  emit(c.out, c.format == "json" ? rows.dump(2) + "\n" : csv.str(), out);
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse strongly k-connected spanning subgraphs of tournaments", "kspan"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "dot"});

  GenConfig gen;
  auto* g = app.add_subcommand("gen", "Generate a random tournament");
  g->add_option("--n", gen.n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  g->add_option("--k", gen.k, "Redraw until strongly k-connected (0: any tournament)")
      ->check(CLI::NonNegativeNumber);
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--trials", gen.trials, "Maximum draws when --k is set")->check(CLI::PositiveNumber);
  g->add_option("--out", gen.out, "Output file (default: stdout)");
  g->add_option("--format", gen.format, "json or dot")->check(formats);

  SparsifyConfig sp;
  auto* s = app.add_subcommand("sparsify", "Sparsify a strongly k-connected tournament");
  s->add_option("--in", sp.in, "Tournament JSON file")->required();
  s->add_option("--k", sp.k, "Connectivity")->required()->check(CLI::PositiveNumber);
  s->add_option("--out", sp.out, "Subgraph output file (default: stdout)");
  s->add_option("--report", sp.report, "Report JSON file");
  s->add_option("--format", sp.format, "json or dot")->check(formats);
  s->add_option("--sample-pairs", sp.sample_pairs, "Verify only this many sampled pair flows")
      ->check(CLI::PositiveNumber);
  s->add_option("--seed", sp.seed, "Seed for --sample-pairs");
  s->add_flag("--skip-validation", sp.skip_validation, "Do not check the input first");
  s->add_flag("--force-pipeline", sp.force_pipeline, "Use the large-n construction at any n");
  s->add_flag("--no-timing", sp.no_timing, "Leave wall time out of the report");

  VerifyConfig ve;
  auto* v = app.add_subcommand("verify", "Check strong k-connectivity of a digraph or tournament");
  v->add_option("--in", ve.in, "Digraph or tournament JSON file")->required();
  v->add_option("--k", ve.k, "Connectivity")->required()->check(CLI::PositiveNumber);
  v->add_option("--sample-pairs", ve.sample_pairs, "Check only this many sampled pair flows")
      ->check(CLI::PositiveNumber);
  v->add_option("--seed", ve.seed, "Seed for --sample-pairs");
  v->add_flag("--all-pairs", ve.all_pairs, "Run a flow for every non-adjacent ordered pair");

  BenchConfig be;
  auto* b = app.add_subcommand("bench", "Sparsify generated tournaments and tabulate");
  b->add_option("--n", be.n, "Vertex counts")->delimiter(',')->check(CLI::PositiveNumber);
  b->add_option("--k", be.k, "Connectivities")->delimiter(',')->check(CLI::PositiveNumber);
  b->add_option("--trials", be.trials, "Instances per (n, k)")->check(CLI::PositiveNumber);
  b->add_option("--seed", be.seed, "First generator seed");
  b->add_option("--sample-pairs", be.sample_pairs, "Verify only this many sampled pair flows")
      ->check(CLI::PositiveNumber);
  b->add_flag("--skip-validation", be.skip_validation, "Do not check inputs first");
  b->add_flag("--force-pipeline", be.force_pipeline, "Use the large-n construction at any n");
  b->add_option("--format", be.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  b->add_option("--out", be.out, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen, out);
    if (*s) return cmd_sparsify(sp, out, err);
    if (*v) return cmd_verify(ve, out);
    if (*b) return cmd_bench(be, out);
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::kParse || e.code() == ErrorCode::kInvalidArgument;
    return usage ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace kspan::cli
