#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kspan/connectivity.hpp"
#include "kspan/digraph.hpp"
#include "kspan/dominating_chain.hpp"
#include "kspan/linkage.hpp"
#include "kspan/tournament.hpp"

namespace kspan {

/// One audited inequality. Upper checks mean value <= bound, lower checks
/// value >= bound.
struct BoundCheck {
  std::string name;
  double value = 0;
  double bound = 0;
  bool upper = true;
  bool holds() const { return upper ? value <= bound + 1e-9 : value + 1e-9 >= bound; }
};

struct ExtremeSets {
  VertexSet x;  // 3k-1 vertices of smallest out-degree
  VertexSet y;  // 3k-1 vertices of smallest in-degree, disjoint from x
  int delta_plus = 0;
  int delta_minus = 0;
};

/// Every vertex outside x has out-degree >= delta_plus and every vertex
/// outside y in-degree >= delta_minus. Throws kTooSmall when no disjoint
/// choice with that property exists.
ExtremeSets build_extreme_sets(const Tournament& t, int k);

/// Membership data the fan constructions read. Vectors are indexed by vertex.
struct FanContext {
  int k = 0;
  int delta_plus = 0;
  int delta_minus = 0;
  std::vector<char> in_x;
  std::vector<char> in_y;
  std::vector<char> in_a;
  std::vector<char> in_b;
  std::vector<char> in_b_first;   // union of the B'' windows
  std::vector<int> b_chain;       // index of the B-chain holding v, or -1
  std::vector<int> b_chain_size;  // |B_i|
  std::vector<VertexSet> b_last;  // B'_i windows
};

/// k-fan from V \ (A u B) into v in A u B.
Fan fan_to_ab(const Tournament& t, const Digraph& td, const FanContext& ctx, Vertex v);

struct OutFan {
  Fan star;  // from v to V \ (A u B'')
  Fan fan;   // from v to V \ (A u B)
};

/// k-fan from v in A u B out to V \ (A u B), built from `star` by the
/// endpoint classes I1..I4.
OutFan fan_from_ab(const Tournament& t, const Digraph& td, const FanContext& ctx, Vertex v);

/// Extends each star path ending in B \ B'' by escort vertices so that all
/// paths end outside A u B.
Fan extend_out_fan(const Tournament& t, const FanContext& ctx, const Fan& star);

struct PipelineState {
  int k = 0;
  ExtremeSets extremes;
  std::vector<DominatingChain> a_chains;  // global ids
  std::vector<DominatingChain> b_chains;
  std::vector<int> d_plus;
  std::vector<int> d_minus;
  VertexSet a_sink;
  VertexSet b_source;
  std::vector<VertexSet> b_last;
  std::vector<VertexSet> b_first;
  VertexSet a_selected;
  VertexSet b_selected;
  PathSystem backbone;  // paths[t] runs a_selected[t] -> b_selected[t]
  VertexSet v1, v1_prime, v2, v3, v4;
  std::vector<Arc> e0, e1, e2, e3, e4, e5;
  VertexSet w1_minus, w1_plus;
  VertexSet w_minus, w_plus;
  std::vector<Fan> in_fans;   // one per vertex of w1_minus
  std::vector<OutFan> out_fans;  // one per vertex of w1_plus
  FanContext context;
};

struct PipelineResult {
  Digraph graph;
  PipelineState state;
  std::vector<BoundCheck> ledger;
  bool e0_tight_form_holds = false;
  std::optional<KConnectivityResult> verification;
};

struct PipelineOptions {
  bool verify = true;
  KConnectivityOptions verifier;
};

/// Runs the construction on t as given (no reversal). Requires k >= 2 and
/// delta_minus >= delta_plus; throws kTooSmall if fewer than k vertices lie
/// outside A u B, kInternalInvariant on any failed audit.
PipelineResult run_pipeline(const Tournament& t, int k, const PipelineOptions& options = {});

double log2_plus_one(int k);

}  // namespace kspan
