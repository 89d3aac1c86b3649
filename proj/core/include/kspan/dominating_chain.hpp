#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kspan/digraph.hpp"
#include "kspan/tournament.hpp"

namespace kspan {

enum class ChainKind { kIn, kOut };

/// Transitive chain v_1..v_s. An in-chain starts at its root and
/// in-dominates the rest of its host; an out-chain ends at its root and
/// out-dominates the rest.
struct DominatingChain {
  VertexSet vertices;  // v_1 beats every later vertex
  ChainKind kind = ChainKind::kIn;
  Vertex root = 0;
  int d = 0;                // d+(root) for in-chains, d-(root) for out-chains
  std::vector<int> levels;  // |L_1|, ..., |L_s| in construction order

  int size() const noexcept { return static_cast<int>(vertices.size()); }
  Vertex source() const { return vertices.front(); }
  Vertex sink() const { return vertices.back(); }
};

DominatingChain in_dominating_chain(const Tournament& t, Vertex v);

/// Built as the in-chain of reverse(t), read backwards.
DominatingChain out_dominating_chain(const Tournament& t, Vertex v);

/// Audits size bounds, transitivity with the right source/sink, domination,
/// level contraction and both window degree bounds, the last with parameter k.
std::optional<std::string> audit_chain(const Tournament& t, const DominatingChain& c, int k);

struct ChainWindows {
  VertexSet last;   // last max(ceil(s/5 - 13), 0) vertices
  VertexSet first;  // first min(ceil(5 log2 k + 30), s) vertices
};

ChainWindows chain_windows(const DominatingChain& c, int k);

}  // namespace kspan
