#include "kspan/matching.hpp"

#include <algorithm>
#include <limits>

namespace kspan {

std::size_t BipartiteGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& row : adjacency) m += row.size();
  return m;
}

bool BipartiteGraph::has_edge(int a, int b) const {
  const auto& row = adjacency[a];
  return std::binary_search(row.begin(), row.end(), b);
}

void BipartiteGraph::remove_edge(int a, int b) {
  auto& row = adjacency[a];
  auto it = std::lower_bound(row.begin(), row.end(), b);
  if (it != row.end() && *it == b) row.erase(it);
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g), mate_left_(g.left, -1), mate_right_(g.right, -1), dist_(g.left), cursor_(g.left) {}

  MatchingEdges run() {
    while (bfs()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (int a = 0; a < g_.left; ++a)
        if (mate_left_[a] == -1) dfs(a);
    }
    MatchingEdges edges;
    for (int a = 0; a < g_.left; ++a)
      if (mate_left_[a] != -1) edges.emplace_back(a, mate_left_[a]);
    return edges;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::vector<int> queue;
    for (int a = 0; a < g_.left; ++a) {
      if (mate_left_[a] == -1) {
        dist_[a] = 0;
        queue.push_back(a);
      } else {
        dist_[a] = kInf;
      }
    }
    bool reachable_free = false;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int a = queue[qi];
      for (int b : g_.adjacency[a]) {
        const int next = mate_right_[b];
        if (next == -1) {
          reachable_free = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[a] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable_free;
  }

  // Iterative layered DFS to avoid deep recursion on long augmenting paths.
  bool dfs(int root) {
    std::vector<int> stack{root};
    std::vector<int> via;  // right vertex used to reach stack[i + 1]
    while (!stack.empty()) {
      const int a = stack.back();
      const auto& row = g_.adjacency[a];
      bool advanced = false;
      while (cursor_[a] < static_cast<int>(row.size())) {
        const int b = row[cursor_[a]++];
        const int next = mate_right_[b];
        if (next == -1) {
          // Augment along the stack.
          via.push_back(b);
          for (std::size_t i = 0; i < stack.size(); ++i) {
            mate_left_[stack[i]] = via[i];
            mate_right_[via[i]] = stack[i];
          }
          return true;
        }
        if (dist_[next] == dist_[a] + 1) {
          via.push_back(b);
          stack.push_back(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist_[a] = kInf;
        stack.pop_back();
        if (!via.empty()) via.pop_back();
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> dist_;
  std::vector<int> cursor_;
};

}  // namespace

MatchingEdges maximum_matching(const BipartiteGraph& g) { return HopcroftKarp(g).run(); }

}  // namespace kspan
