#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kspan/digraph.hpp"
#include "kspan/tournament.hpp"

namespace kspan {

enum class FanDirection { kFromCenter, kToCenter };

/// k paths between `center` and distinct targets, pairwise meeting only at
/// the center. paths[i] joins center and targets[i]; every path is stored
/// in travel order (center first for kFromCenter, center last otherwise).
struct Fan {
  Vertex center = 0;
  VertexSet targets;
  std::vector<Path> paths;
  FanDirection direction = FanDirection::kFromCenter;

  std::size_t total_length() const;
};

/// Checks the fan invariants against `d`. With a nonempty `pool`, each path
/// must also avoid every pool vertex other than its own target (the center
/// excepted). Returns a description of the first violation.
std::optional<std::string> validate_fan(const Digraph& d, const Fan& fan,
                                        std::span<const Vertex> pool = {});

/// A k-fan between v and k vertices of `pool` of minimum total length.
/// If v is in the pool its trivial path is one of the k. Throws kNoFan when
/// fewer than k such paths exist.
Fan k_fan(const Digraph& d, Vertex v, std::span<const Vertex> pool, int k, FanDirection direction);

struct PathSystem {
  std::vector<Path> paths;
  std::size_t total_length = 0;
};

/// k pairwise vertex-disjoint paths, each from a distinct source to a
/// distinct sink, of minimum total length. paths[i] starts at sources[i].
/// Throws kNoLinkage when no k such paths exist.
PathSystem min_disjoint_paths(const Digraph& d, std::span<const Vertex> sources,
                              std::span<const Vertex> sinks, int k);

/// Every vertex of `p` beats, in `t`, each predecessor at distance >= 2.
bool check_backwards_transitive(const Tournament& t, const Path& p);

}  // namespace kspan
