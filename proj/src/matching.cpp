#include "curv/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <set>

#include "curv/error.hpp"
#include "curv/transport.hpp"

namespace curv {

void BipartiteInstance::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.first >= left.size() || e.second >= right.size()) {
      throw Error(ErrorKind::InvalidParams, "bipartite edge index out of range");
    }
    if (!seen.insert(e).second) throw Error(ErrorKind::InvalidParams, "repeated bipartite edge");
  }
}

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<std::size_t>> left_adjacency(const BipartiteInstance& b) {
  std::vector<std::vector<std::size_t>> adj(b.left.size());
  for (const auto& [l, r] : b.edges) adj[l].push_back(r);
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteInstance& b)
      : adj_(left_adjacency(b)), match_left_(b.left.size(), kFree), match_right_(b.right.size(), kFree) {}

  void run() {
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kFree) dfs(u);
      }
    }
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }
  const std::vector<std::size_t>& match_right() const { return match_right_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }

 private:
  bool bfs() {
    layer_.assign(adj_.size(), kFree);
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        layer_[u] = 0;
        q.push(u);
      }
    }
    bool found = false;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t r : adj_[u]) {
        const std::size_t w = match_right_[r];
        if (w == kFree) {
          found = true;
        } else if (layer_[w] == kFree) {
          layer_[w] = layer_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t r : adj_[u]) {
      const std::size_t w = match_right_[r];
      if (w == kFree || (layer_[w] == layer_[u] + 1 && dfs(w))) {
        match_left_[u] = r;
        match_right_[r] = u;
        return true;
      }
    }
    layer_[u] = kFree;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_, match_right_, layer_;
};

}  // namespace

MatchingResult max_matching(const BipartiteInstance& b) {
  b.validate();
  HopcroftKarp hk(b);
  hk.run();
  MatchingResult result;
  const auto& ml = hk.match_left();
  for (std::size_t u = 0; u < ml.size(); ++u) {
    if (ml[u] != kFree) result.pairs.emplace_back(u, ml[u]);
  }
  result.perfect = b.left.size() == b.right.size() && result.pairs.size() == b.left.size();
  if (result.pairs.size() < b.left.size()) {
    // Koenig: left vertices reachable from free left vertices along
    // alternating paths have only matched right neighbors, all matched back
    // into the set, so the set exceeds its neighborhood by the free count.
    std::vector<bool> reached(b.left.size(), false);
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < ml.size(); ++u) {
      if (ml[u] == kFree) {
        reached[u] = true;
        q.push(u);
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t r : hk.adjacency()[u]) {
        const std::size_t w = hk.match_right()[r];
        if (w != kFree && !reached[w]) {
          reached[w] = true;
          q.push(w);
        }
      }
    }
    std::vector<std::size_t> violator;
    for (std::size_t u = 0; u < reached.size(); ++u) {
      if (reached[u]) violator.push_back(u);
    }
    result.violator = std::move(violator);
  }
  return result;
}

std::vector<std::size_t> left_neighborhood(const BipartiteInstance& b, const std::vector<std::size_t>& subset) {
  std::vector<bool> in_subset(b.left.size(), false);
  for (std::size_t u : subset) in_subset.at(u) = true;
  std::set<std::size_t> out;
  for (const auto& [l, r] : b.edges) {
    if (in_subset[l]) out.insert(r);
  }
  return {out.begin(), out.end()};
}

BipartiteInstance local_bipartite(const Graph& g, VertexId x, VertexId y) {
  if (!g.regular_degree()) throw Error(ErrorKind::NotRegular, "local matching needs a regular graph");
  const auto nb = decompose_edge(g, x, y);
  BipartiteInstance b;
  b.left = nb.nx;
  b.right = nb.ny;
  for (std::size_t i = 0; i < b.left.size(); ++i) {
    for (VertexId w : g.neighbors(b.left[i])) {
      const auto it = std::lower_bound(b.right.begin(), b.right.end(), w);
      if (it != b.right.end() && *it == w) b.edges.emplace_back(i, static_cast<std::size_t>(it - b.right.begin()));
    }
  }
  return b;
}

MatchingResult local_perfect_matching(const Graph& g, VertexId x, VertexId y) {
  return max_matching(local_bipartite(g, x, y));
}

HallReductionResult hall_reduction_check(const BipartiteInstance& b) {
  if (b.left.size() != b.right.size()) {
    throw Error(ErrorKind::UnbalancedSides, std::to_string(b.left.size()) + " vs " + std::to_string(b.right.size()));
  }
  const std::size_t m = b.left.size();
  if (m > kMaxHallSide) throw Error(ErrorKind::TooLarge, "exhaustive Hall check is capped at m = 14");
  b.validate();
  std::vector<std::uint32_t> left_nbrs(m, 0), right_nbrs(m, 0);
  for (const auto& [l, r] : b.edges) {
    left_nbrs[l] |= 1u << r;
    right_nbrs[r] |= 1u << l;
  }
  auto hall = [m](const std::vector<std::uint32_t>& nbrs, std::size_t max_size) {
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
      const auto size = static_cast<std::size_t>(std::popcount(s));
      if (size > max_size) continue;
      std::uint32_t hood = 0;
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) hood |= nbrs[std::countr_zero(rest)];
      if (static_cast<std::size_t>(std::popcount(hood)) < size) return false;
    }
    return true;
  };
  HallReductionResult out;
  const std::size_t half = (m + 1) / 2;  // |S| <= (m+1)/2
  out.hypothesis_holds = hall(left_nbrs, half) && hall(right_nbrs, half);
  out.full_hall_holds = hall(left_nbrs, m);
  return out;
}

SharpnessEquivalence sharpness_equivalence(const Graph& g, VertexId x, VertexId y) {
  SharpnessEquivalence out;
  out.kappa_sharp = lly_curvature(g, x, y).sharp;
  out.matching_perfect = local_perfect_matching(g, x, y).perfect;
  out.agree = out.kappa_sharp == out.matching_perfect;
  return out;
}

}  // namespace curv
