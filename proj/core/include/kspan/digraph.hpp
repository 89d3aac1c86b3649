#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kspan {

using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Sparse simple digraph on vertices [0, n). No loops, no parallel arcs.
///
/// Out- and in-neighbour lists are kept sorted so iteration order (and
/// therefore every algorithm built on top) is deterministic.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  /// Duplicate arcs are collapsed; loops or out-of-range endpoints throw.
  Digraph(int n, std::span<const Arc> arcs);

  int order() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t size() const noexcept { return arc_count_; }

  /// Returns false if the arc was already present.
  bool add_arc(Vertex tail, Vertex head);
  bool add_arc(Arc a) { return add_arc(a.tail, a.head); }
  void add_arcs(std::span<const Arc> arcs);
  bool has_arc(Vertex tail, Vertex head) const;

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

  /// All arcs, sorted by (tail, head).
  std::vector<Arc> arcs() const;

  Digraph reversed() const;
  /// Sub-digraph induced on `keep`; vertex i of the result is keep[i].
  Digraph induced(std::span<const Vertex> keep) const;
  /// Removes the given arcs if present (D - E').
  Digraph without_arcs(std::span<const Arc> removed) const;

  bool operator==(const Digraph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// A directed path given by its vertex sequence. A single vertex is the
/// trivial path of length 0.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::vector<Arc> arcs() const;
  std::span<const Vertex> interior() const;

  bool operator==(const Path&) const = default;
};

/// True if `p` is nonempty, repeats no vertex, and every step is an arc of d.
bool is_path_in(const Digraph& d, const Path& p);

/// A permutation of [0, n). Positions are 1-indexed at this interface and
/// windows are clamped to [1, n].
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<Vertex> by_position);
  static Ordering identity(int n);

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  /// Vertex at 1-indexed position p.
  Vertex at(int p) const { return perm_[static_cast<std::size_t>(p - 1)]; }
  /// 1-indexed position of v.
  int position(Vertex v) const { return pos_[static_cast<std::size_t>(v)] + 1; }
  /// Vertices at positions a..b, clamped to [1, n]; empty when a > b.
  std::vector<Vertex> window(int a, int b) const;
  const std::vector<Vertex>& vertices() const noexcept { return perm_; }

  bool operator==(const Ordering&) const = default;

 private:
  std::vector<Vertex> perm_;
  std::vector<int> pos_;
};

}  // namespace kspan
