#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "curv/graph.hpp"

namespace curv {

struct BipartiteInstance {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (left index, right index)

  // Throws InvalidParams on out-of-range indices or repeated edges.
  void validate() const;
};

struct MatchingResult {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted by left index
  bool perfect = false;
  // Left subset S (sorted indices) with |N(S)| < |S|; present whenever some
  // left vertex is left unmatched.
  std::optional<std::vector<std::size_t>> violator;
};

// Hopcroft-Karp maximum matching. A violator, when present, is the set of
// left vertices reachable from unmatched left vertices by alternating paths.
MatchingResult max_matching(const BipartiteInstance& b);

// Right-side neighborhood of a set of left indices.
std::vector<std::size_t> left_neighborhood(const BipartiteInstance& b, const std::vector<std::size_t>& subset);

// Bipartite graph between N_x and N_y of edge xy. Throws NotRegular or
// NotAnEdge.
BipartiteInstance local_bipartite(const Graph& g, VertexId x, VertexId y);
MatchingResult local_perfect_matching(const Graph& g, VertexId x, VertexId y);

struct HallReductionResult {
  bool hypothesis_holds = false;  // Hall for all subsets of size <= (m+1)/2, both sides
  bool full_hall_holds = false;   // Hall for all left subsets
};

inline constexpr std::size_t kMaxHallSide = 14;

// Exhaustive subset check. Throws UnbalancedSides or TooLarge (m > 14).
HallReductionResult hall_reduction_check(const BipartiteInstance& b);

struct SharpnessEquivalence {
  bool kappa_sharp = false;
  bool matching_perfect = false;
  bool agree = false;
};

SharpnessEquivalence sharpness_equivalence(const Graph& g, VertexId x, VertexId y);

}  // namespace curv
