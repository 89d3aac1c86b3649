#include "kspan/digraph.hpp"

#include <algorithm>
#include <string>

#include "kspan/error.hpp"

namespace kspan {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kNotKConnected: return "NotKConnected";
    case ErrorCode::kNotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::kNoFan: return "NoFan";
    case ErrorCode::kNoLinkage: return "NoLinkage";
    case ErrorCode::kDegreeTooLow: return "DegreeTooLow";
    case ErrorCode::kMatchingDeficit: return "MatchingDeficit";
    case ErrorCode::kStuck: return "Stuck";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kInternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Digraph::Digraph(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  out_.resize(n);
  in_.resize(n);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) { add_arcs(arcs); }

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
}

bool Digraph::add_arc(Vertex tail, Vertex head) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw Error(ErrorCode::kInvalidArgument, "loop at " + std::to_string(tail));
  auto& out = out_[tail];
  auto it = std::lower_bound(out.begin(), out.end(), head);
  if (it != out.end() && *it == head) return false;
  out.insert(it, head);
  auto& in = in_[head];
  in.insert(std::lower_bound(in.begin(), in.end(), tail), tail);
  ++arc_count_;
  return true;
}

void Digraph::add_arcs(std::span<const Arc> arcs) {
  for (const Arc& a : arcs) add_arc(a);
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (tail < 0 || tail >= order() || head < 0 || head >= order()) return false;
  const auto& out = out_[tail];
  return std::binary_search(out.begin(), out.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : out_[u]) result.push_back({u, v});
  return result;
}

Digraph Digraph::reversed() const {
  Digraph r;
  r.out_ = in_;
  r.in_ = out_;
  r.arc_count_ = arc_count_;
  return r;
}

Digraph Digraph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> local(static_cast<std::size_t>(order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    if (local[keep[i]] != -1)
      throw Error(ErrorCode::kInvalidArgument, "duplicate vertex in induced set");
    local[keep[i]] = static_cast<Vertex>(i);
  }
  Digraph sub(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex v : out_[keep[i]])
      if (Vertex lv = local[v]; lv != -1) sub.add_arc(static_cast<Vertex>(i), lv);
  return sub;
}

Digraph Digraph::without_arcs(std::span<const Arc> removed) const {
  std::vector<Arc> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  Digraph result(order());
  for (const Arc& a : arcs())
    if (!std::binary_search(drop.begin(), drop.end(), a)) result.add_arc(a);
  return result;
}

std::vector<Arc> Path::arcs() const {
  std::vector<Arc> result;
  for (std::size_t i = 1; i < vertices.size(); ++i) result.push_back({vertices[i - 1], vertices[i]});
  return result;
}

std::span<const Vertex> Path::interior() const {
  if (vertices.size() <= 2) return {};
  return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
}

bool is_path_in(const Digraph& d, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<Vertex> seen(p.vertices);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  if (seen.front() < 0 || seen.back() >= d.order()) return false;
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    if (!d.has_arc(p.vertices[i - 1], p.vertices[i])) return false;
  return true;
}

Ordering::Ordering(std::vector<Vertex> by_position) : perm_(std::move(by_position)) {
  pos_.assign(perm_.size(), -1);
  for (std::size_t p = 0; p < perm_.size(); ++p) {
    Vertex v = perm_[p];
    if (v < 0 || v >= static_cast<Vertex>(perm_.size()) || pos_[v] != -1)
      throw Error(ErrorCode::kInvalidArgument, "ordering is not a permutation");
    pos_[v] = static_cast<int>(p);
  }
}

Ordering Ordering::identity(int n) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return Ordering(std::move(perm));
}

std::vector<Vertex> Ordering::window(int a, int b) const {
  a = std::max(a, 1);
  b = std::min(b, size());
  std::vector<Vertex> result;
  for (int p = a; p <= b; ++p) result.push_back(at(p));
  return result;
}

}  // namespace kspan
