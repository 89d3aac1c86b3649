#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kspan/digraph.hpp"

namespace kspan {

enum class Direction { kOut, kIn };
enum class Extreme { kLargest, kSmallest };

struct DegreePair {
  int out = 0;
  int in = 0;
  bool operator==(const DegreePair&) const = default;
};

/// Complete oriented graph on n vertices, one orientation bit per unordered
/// pair. Pair (i, j) with i < j is stored at its row-major upper-triangle
/// index; a set bit means i -> j.
class Tournament {
 public:
  Tournament() = default;
  /// All pairs oriented from the smaller id to the larger (transitive).
  explicit Tournament(int n);

  static Tournament transitive(int n) { return Tournament(n); }
  /// Builds from a predicate beats(u, v) queried once per pair u < v.
  template <typename Beats>
  static Tournament from_predicate(int n, Beats&& beats) {
    Tournament t(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (!beats(u, v)) t.orient(v, u);
      }
    return t;
  }

  int order() const noexcept { return n_; }
  std::size_t pair_count() const noexcept {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2;
  }

  /// True iff u -> v. False when u == v.
  bool beats(Vertex u, Vertex v) const;
  /// Sets the orientation of {u, v} to u -> v.
  void orient(Vertex u, Vertex v);

  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const { return n_ - 1 - out_degree(v); }
  int degree(Vertex v, Direction dir) const {
    return dir == Direction::kOut ? out_degree(v) : in_degree(v);
  }
  VertexSet out_neighbors(Vertex v) const;
  VertexSet in_neighbors(Vertex v) const;

  /// Raw upper-triangle bit for pair index idx.
  bool pair_bit(std::size_t idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1u;
  }
  void set_pair_bit(std::size_t idx, bool value);
  std::size_t pair_index(Vertex i, Vertex j) const;  // requires i < j

  Digraph to_digraph() const;

  bool operator==(const Tournament&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

std::vector<DegreePair> degree_profile(const Tournament& t);

/// A vertex v with n/4 <= d^dir(v) <= 3n/4; smallest qualifying id.
Vertex balanced_vertex(const Tournament& t, Direction dir);

/// The `count` vertices of most extreme degree in direction `dir`, ties
/// broken by smallest id. Returned in rank order.
VertexSet top_degree_set(const Tournament& t, Direction dir, Extreme extreme, int count);

Tournament reverse(const Tournament& t);

struct InducedTournament {
  Tournament tournament;
  /// to_parent[i] is the parent id of local vertex i.
  VertexSet to_parent;
};

/// Sub-tournament induced on `keep` (order preserved, duplicates rejected).
InducedTournament induced(const Tournament& t, std::span<const Vertex> keep);

/// Is the tournament transitive with respect to the given vertex order
/// (every earlier vertex beats every later one)?
bool is_transitive_order(const Tournament& t, std::span<const Vertex> order);

}  // namespace kspan
