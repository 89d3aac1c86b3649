#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kspan/connectivity.hpp"
#include "kspan/digraph.hpp"
#include "kspan/pipeline.hpp"
#include "kspan/tournament.hpp"

namespace kspan {

enum class Branch { kHamiltonCycle, kSmall, kPipeline };

std::string_view to_string(Branch b) noexcept;

struct SparsifyOptions {
  bool skip_validation = false;
  /// Run the large-n construction even when n <= 100 k log2(k+1); falls
  /// back to the small construction if fewer than k vertices remain
  /// outside the dominating chains.
  bool force_pipeline = false;
  bool verify_output = true;
  KConnectivityOptions verifier;
};

struct SparsifyReport {
  int n = 0;
  int k = 0;
  Branch branch = Branch::kSmall;
  bool reversed = false;
  bool pipeline_fell_back = false;
  std::size_t arcs = 0;
  double bound = 0;
  std::vector<BoundCheck> ledger;
  std::optional<bool> e0_tight_form_holds;
  std::optional<bool> verified;
  bool verification_probabilistic = false;
  double wall_time_ms = 0;
};

struct SparsifyResult {
  Digraph graph;
  SparsifyReport report;
  std::optional<PipelineState> state;  // present for the pipeline branch
};

/// kn + 750 k^2 log2(k+1).
double main_bound(int n, int k);

/// (5k-2)n + C(5k, 2).
double small_bound(int n, int k);

/// True when the default dispatch runs the large-n construction.
bool uses_pipeline(int n, int k);

/// Strongly k-connected spanning subgraph of t with at most main_bound arcs.
/// Throws kNotKConnected for invalid input (unless validation is skipped)
/// and kInternalInvariant if any audit fails.
SparsifyResult sparsify(const Tournament& t, int k, const SparsifyOptions& options = {});

/// Report as JSON text. Timing is omitted when include_timing is false.
std::string report_to_json(const SparsifyReport& report, bool include_timing = true);

}  // namespace kspan
