#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace curv {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Immutable simple undirected graph. Neighbor lists are sorted ascending and
// vertex ids never change after construction.
class Graph {
 public:
  Graph() = default;

  // Rejects out-of-range endpoints, loops and repeated edges (in either
  // orientation) with ErrorKind::InvalidGraph.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Common degree if every vertex has the same degree; the empty graph on
  // zero vertices has none.
  std::optional<std::size_t> regular_degree() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct SrgParams {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  // Throws InvalidParams unless n > d >= 1, alpha <= d-1 and beta <= d.
  void validate() const;

  // d(d-alpha-1) == (n-d-1) beta.
  bool satisfies_identity() const;
  bool is_conference() const;
  // (n-1)/4 for conference parameters; throws InvalidParams otherwise.
  std::int64_t gamma() const;

  std::string to_string() const;
  static SrgParams parse(const std::string& text);  // "n,d,a,b"

  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

struct EdgeNeighborhood {
  VertexId x = 0;
  VertexId y = 0;
  std::vector<VertexId> delta;  // common neighbors of x and y
  std::vector<VertexId> nx;     // neighbors of x only
  std::vector<VertexId> ny;     // neighbors of y only
  std::vector<VertexId> pxy;    // adjacent to neither
};

struct RegularityClass {
  enum class Kind { Irregular, Regular, AmplyRegular, StronglyRegular };

  Kind kind = Kind::Irregular;
  std::size_t degree = 0;           // meaningful unless Irregular
  std::optional<SrgParams> params;  // set for AmplyRegular and StronglyRegular
  bool connected = false;

  bool is_amply_regular() const { return kind == Kind::AmplyRegular || kind == Kind::StronglyRegular; }
  bool is_strongly_regular() const { return kind == Kind::StronglyRegular; }
  std::string to_string() const;
};

struct NeighborProfile {
  std::int64_t ell = 0;       // neighbors of v in N_y
  std::int64_t in_delta = 0;  // beta - 1 - ell
  std::int64_t in_nx = 0;     // alpha - beta + 1 + ell
  std::int64_t in_pxy = 0;    // d - alpha - 1 - ell

  friend bool operator==(const NeighborProfile&, const NeighborProfile&) = default;
};

enum class IdentityRelation { Strict, Equal, Violated };

struct IdentityCheck {
  std::int64_t lhs = 0;  // d(d-alpha-1)
  std::int64_t rhs = 0;  // (n-d-1) beta
  IdentityRelation relation = IdentityRelation::Strict;
};

// Shortest-path lengths from source; kUnreachable marks other components.
// A finite max_depth stops the search there, leaving deeper vertices at
// kUnreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source,
                                         std::uint32_t max_depth = kUnreachable);

EdgeNeighborhood decompose_edge(const Graph& g, VertexId x, VertexId y);

// Number of common neighbors, by merge-scan of the sorted lists.
std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId v);

RegularityClass classify_regularity(const Graph& g);

NeighborProfile neighbor_profile(const Graph& g, const SrgParams& params, VertexId x, VertexId y,
                                 VertexId v);
// Classifies g first; throws NotAmplyRegular if it is not.
NeighborProfile neighbor_profile(const Graph& g, VertexId x, VertexId y, VertexId v);

IdentityCheck parameter_identity_check(const Graph& g);

}  // namespace curv
