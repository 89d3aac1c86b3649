#include "kspan/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kspan/error.hpp"

namespace kspan {

Tournament::Tournament(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  const std::size_t m = pair_count();
  bits_.assign((m + 63) / 64, ~std::uint64_t{0});
  if (m % 64 != 0) bits_.back() = (std::uint64_t{1} << (m % 64)) - 1;
}

std::size_t Tournament::pair_index(Vertex i, Vertex j) const {
  // Row i holds pairs (i, i+1) .. (i, n-1).
  const auto si = i;
  const auto sn = n_;
  return si * sn - si * (si + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

void Tournament::set_pair_bit(std::size_t idx, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (idx & 63);
  if (value)
    bits_[idx >> 6] |= mask;
  else
    bits_[idx >> 6] &= ~mask;
}

bool Tournament::beats(Vertex u, Vertex v) const {
  if (u == v) return false;
  return u < v ? pair_bit(pair_index(u, v)) : !pair_bit(pair_index(v, u));
}

void Tournament::orient(Vertex u, Vertex v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorCode::kInvalidArgument, "bad pair in orient");
  if (u < v)
    set_pair_bit(pair_index(u, v), true);
  else
    set_pair_bit(pair_index(v, u), false);
}

int Tournament::out_degree(Vertex v) const {
  int d = 0;
  for (Vertex u = 0; u < n_; ++u) d += beats(v, u) ? 1 : 0;
  return d;
}

VertexSet Tournament::out_neighbors(Vertex v) const {
  VertexSet result;
  for (Vertex u = 0; u < n_; ++u)
    if (beats(v, u)) result.push_back(u);
  return result;
}

VertexSet Tournament::in_neighbors(Vertex v) const {
  VertexSet result;
  for (Vertex u = 0; u < n_; ++u)
    if (beats(u, v)) result.push_back(u);
  return result;
}

Digraph Tournament::to_digraph() const {
  std::vector<Arc> arcs;
  arcs.reserve(pair_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) arcs.push_back(beats(u, v) ? Arc{u, v} : Arc{v, u});
  return Digraph(n_, arcs);
}

std::vector<DegreePair> degree_profile(const Tournament& t) {
  const int n = t.order();
  std::vector<DegreePair> profile(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      auto& pu = profile[u];
      auto& pv = profile[v];
      if (t.beats(u, v)) {
        ++pu.out;
        ++pv.in;
      } else {
        ++pv.out;
        ++pu.in;
      }
    }
  }
  return profile;
}

Vertex balanced_vertex(const Tournament& t, Direction dir) {
  const int n = t.order();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "balanced_vertex needs n >= 2");
  const auto profile = degree_profile(t);
  for (Vertex v = 0; v < n; ++v) {
    const auto& p = profile[v];
    const int d = dir == Direction::kOut ? p.out : p.in;
    // n/4 <= d <= 3n/4 without rounding.
    if (4 * d >= n && 4 * d <= 3 * n) return v;
  }
  throw Error(ErrorCode::kInternalInvariant, "no balanced vertex exists");
}

VertexSet top_degree_set(const Tournament& t, Direction dir, Extreme extreme, int count) {
  const int n = t.order();
  if (count < 0 || count > n) throw Error(ErrorCode::kInvalidArgument, "count out of range");
  const auto profile = degree_profile(t);
  VertexSet order(n);
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](Vertex v) {
    const auto& p = profile[v];
    return dir == Direction::kOut ? p.out : p.in;
  };
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return extreme == Extreme::kLargest ? deg(a) > deg(b) : deg(a) < deg(b);
  });
  order.resize(count);
  return order;
}

Tournament reverse(const Tournament& t) {
  Tournament r = t;
  for (std::size_t idx = 0; idx < t.pair_count(); ++idx) r.set_pair_bit(idx, !t.pair_bit(idx));
  return r;
}

InducedTournament induced(const Tournament& t, std::span<const Vertex> keep) {
  std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
  for (Vertex v : keep) {
    if (v < 0 || v >= t.order()) throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
    if (seen[v]++) throw Error(ErrorCode::kInvalidArgument, "duplicate vertex");
  }
  const int m = static_cast<int>(keep.size());
  InducedTournament result{Tournament(m), VertexSet(keep.begin(), keep.end())};
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = i + 1; j < m; ++j)
      if (!t.beats(keep[i], keep[j]))
        result.tournament.orient(j, i);
  return result;
}

bool is_transitive_order(const Tournament& t, std::span<const Vertex> order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!t.beats(order[i], order[j])) return false;
  return true;
}

}  // namespace kspan
