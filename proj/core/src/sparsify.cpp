#include "kspan/sparsify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "kspan/error.hpp"
#include "kspan/small_sparsifier.hpp"

namespace kspan {

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::kHamiltonCycle:
      return "hamilton_cycle";
    case Branch::kSmall:
      return "small";
    case Branch::kPipeline:
      return "pipeline";
  }
  return "unknown";
}

double main_bound(int n, int k) {
  return static_cast<double>(k) * n + 750.0 * k * k * log2_plus_one(k);
}

double small_bound(int n, int k) {
  return (5.0 * k - 2) * n + 5.0 * k * (5.0 * k - 1) / 2;
}

bool uses_pipeline(int n, int k) { return k >= 2 && n > 100.0 * k * log2_plus_one(k); }

namespace {

std::string describe_separator(const KConnectivityResult& r) {
  std::ostringstream msg;
  if (r.too_few_vertices) {
    msg << "too few vertices";
  } else if (r.separator) {
    msg << "separated by {";
    for (std::size_t i = 0; i < r.separator->size(); ++i) msg << (i ? ", " : "") << (*r.separator)[i];
    msg << "}";
  }
  return msg.str();
}

}  // namespace

SparsifyResult sparsify(const Tournament& t, int k, const SparsifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const int n = t.order();
  SparsifyResult result;
  SparsifyReport& report = result.report;
  report.n = n;
  report.k = k;
  report.bound = main_bound(n, k);

  if (!options.skip_validation) {
    const KConnectivityResult input = check_strongly_k_connected(t.to_digraph(), k);
    if (!input.connected)
      throw Error(ErrorCode::kNotKConnected, "input is not strongly k-connected: " + describe_separator(input));
  }

  bool verified_inside = false;
  if (k == 1) {
    report.branch = Branch::kHamiltonCycle;
    try {
      result.graph = hamilton_cycle(t);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotStronglyConnected) throw;
      throw Error(ErrorCode::kNotKConnected, e.what());
    }
  } else if (uses_pipeline(n, k) || options.force_pipeline) {
    report.branch = Branch::kPipeline;
    try {
      const ExtremeSets ex = build_extreme_sets(t, k);
      report.reversed = ex.delta_minus < ex.delta_plus;
      const Tournament work = report.reversed ? reverse(t) : t;
      PipelineOptions popts;
      popts.verify = options.verify_output;
      popts.verifier = options.verifier;
      PipelineResult run = run_pipeline(work, k, popts);
      result.graph = report.reversed ? run.graph.reversed() : std::move(run.graph);
      report.ledger = std::move(run.ledger);
      report.e0_tight_form_holds = run.e0_tight_form_holds;
      if (run.verification) {
        report.verified = run.verification->connected;
        report.verification_probabilistic = run.verification->probabilistic;
        verified_inside = true;
      }
      result.state = std::move(run.state);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooSmall) throw;
      if (uses_pipeline(n, k)) throw Error(ErrorCode::kInternalInvariant, e.what());
      report.branch = Branch::kSmall;
      report.reversed = false;
      report.pipeline_fell_back = true;
    }
  } else {
    report.branch = Branch::kSmall;
  }
  if (report.branch == Branch::kSmall) {
    result.graph = sparsify_small(t, k, false);
    report.ledger.push_back({"small bound", static_cast<double>(result.graph.size()), small_bound(n, k), true});
    if (!report.ledger.back().holds()) throw Error(ErrorCode::kInternalInvariant, "small construction exceeds its bound");
  }

  report.arcs = result.graph.size();
  report.ledger.push_back({"main bound", static_cast<double>(report.arcs), report.bound, true});
  if (!report.ledger.back().holds()) throw Error(ErrorCode::kInternalInvariant, "output exceeds kn + 750k^2 log2(k+1)");

  if (options.verify_output && !verified_inside) {
    const KConnectivityResult out = check_strongly_k_connected(result.graph, k, options.verifier);
    report.verified = out.connected;
    report.verification_probabilistic = out.probabilistic;
    if (!out.connected)
      throw Error(ErrorCode::kInternalInvariant, "output is not strongly k-connected: " + describe_separator(out));
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string report_to_json(const SparsifyReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["n"] = report.n;
  j["k"] = report.k;
  j["branch"] = std::string(to_string(report.branch));
  j["reversed"] = report.reversed;
  j["pipeline_fell_back"] = report.pipeline_fell_back;
  j["arcs"] = report.arcs;
  j["bound"] = report.bound;
  j["within_bound"] = static_cast<double>(report.arcs) <= report.bound;
  nlohmann::ordered_json ledger = nlohmann::ordered_json::array();
  for (const BoundCheck& c : report.ledger) {
    ledger.push_back({{"name", c.name},
                      {"value", c.value},
                      {"bound", c.bound},
                      {"kind", c.upper ? "at_most" : "at_least"},
                      {"holds", c.holds()}});
  }
  j["ledger"] = ledger;
  if (report.e0_tight_form_holds) j["e0_tight_form_holds"] = *report.e0_tight_form_holds;
  nlohmann::ordered_json verification;
  if (report.verified) {
    verification["result"] = *report.verified ? "connected" : "not_connected";
    verification["mode"] = report.verification_probabilistic ? "probabilistic" : "exhaustive";
  } else {
    verification["result"] = "skipped";
  }
  j["verification"] = verification;
  if (include_timing) j["wall_time_ms"] = report.wall_time_ms;
  return j.dump(2);
}

}  // namespace kspan
