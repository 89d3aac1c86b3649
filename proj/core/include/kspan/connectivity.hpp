#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kspan/digraph.hpp"

namespace kspan {

/// Strongly connected components (Tarjan), each sorted, in reverse
/// topological order of the condensation.
std::vector<VertexSet> strongly_connected_components(const Digraph& d);

bool is_strongly_connected(const Digraph& d);

/// Which ordered vertex pairs the k-connectivity check runs flows on.
enum class PairFamily {
  /// Pairs (r, w) and (w, r) for r in a fixed set of k roots. Exact: any
  /// separator of size < k misses some root.
  kRootReduction,
  /// Every ordered pair (u, w) with no arc u -> w.
  kAllPairs,
};

struct KConnectivityOptions {
  PairFamily family = PairFamily::kRootReduction;
  /// When set, only this many root-pair flows are sampled (uniformly, with
  /// the given seed). The answer is then probabilistic: "true" may be wrong.
  std::optional<std::int64_t> sample_pairs;
  std::uint64_t sample_seed = 0;
};

struct KConnectivityResult {
  bool connected = false;
  /// On failure with |V| >= k + 1: a vertex set of size < k whose removal
  /// leaves the digraph not strongly connected.
  std::optional<VertexSet> separator;
  /// Set when the failure is |V| < k + 1 rather than a separator.
  bool too_few_vertices = false;
  std::int64_t flows_run = 0;
  bool probabilistic = false;

  explicit operator bool() const noexcept { return connected; }
};

/// |V| >= k + 1 and D - S strongly connected for every |S| <= k - 1.
KConnectivityResult check_strongly_k_connected(const Digraph& d, int k,
                                               const KConnectivityOptions& options = {});

inline bool is_strongly_k_connected(const Digraph& d, int k) {
  return check_strongly_k_connected(d, k).connected;
}

/// Maximum number of internally vertex-disjoint s -> t paths, capped at
/// `limit`. For s -> t an arc, the arc counts as one path.
int local_connectivity(const Digraph& d, Vertex s, Vertex t, int limit);

}  // namespace kspan
