#include "curv/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "curv/error.hpp"

namespace curv {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::InvalidGraph,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                      std::to_string(n));
    }
    if (u == v) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorKind::InvalidGraph, "repeated edge at vertex " + std::to_string(v));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adjacency_.empty()) return std::nullopt;
  const std::size_t d = adjacency_.front().size();
  for (const auto& list : adjacency_) {
    if (list.size() != d) return std::nullopt;
  }
  return d;
}

bool Graph::is_connected() const {
  if (adjacency_.empty()) return true;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::uint32_t x) { return x == kUnreachable; });
}

void SrgParams::validate() const {
  if (!(n > d && d >= 1 && alpha >= 0 && beta >= 0 && alpha <= d - 1 && beta <= d)) {
    throw Error(ErrorKind::InvalidParams, "invalid parameters " + to_string());
  }
}

bool SrgParams::satisfies_identity() const { return d * (d - alpha - 1) == (n - d - 1) * beta; }

bool SrgParams::is_conference() const {
  if ((n - 1) % 4 != 0) return false;
  const std::int64_t g = (n - 1) / 4;
  return g >= 1 && d == 2 * g && alpha == g - 1 && beta == g;
}

std::int64_t SrgParams::gamma() const {
  if (!is_conference()) throw Error(ErrorKind::InvalidParams, to_string() + " are not conference parameters");
  return (n - 1) / 4;
}

std::string SrgParams::to_string() const {
  std::ostringstream os;
  os << "(" << n << "," << d << "," << alpha << "," << beta << ")";
  return os.str();
}

SrgParams SrgParams::parse(const std::string& text) {
  std::int64_t values[4];
  std::istringstream is(text);
  for (int i = 0; i < 4; ++i) {
    if (!(is >> values[i])) throw Error(ErrorKind::ParseError, "expected n,d,a,b but got '" + text + "'");
    if (i < 3) {
      char comma = 0;
      if (!(is >> comma) || comma != ',') {
        throw Error(ErrorKind::ParseError, "expected n,d,a,b but got '" + text + "'");
      }
    }
  }
  std::string rest;
  if (is >> rest) throw Error(ErrorKind::ParseError, "trailing input in '" + text + "'");
  SrgParams p{values[0], values[1], values[2], values[3]};
  p.validate();
  return p;
}

std::string RegularityClass::to_string() const {
  switch (kind) {
    case Kind::Irregular: return "Irregular";
    case Kind::Regular: return "Regular(" + std::to_string(degree) + ")";
    case Kind::AmplyRegular: return "AmplyRegular" + params->to_string();
    case Kind::StronglyRegular: return "StronglyRegular" + params->to_string();
  }
  return "?";
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source, std::uint32_t max_depth) {
  if (source >= g.order()) {
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(source) + " out of range for n=" + std::to_string(g.order()));
  }
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::queue<VertexId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    if (dist[u] == max_depth) continue;
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.order()) {
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.order()));
  }
}

}  // namespace

EdgeNeighborhood decompose_edge(const Graph& g, VertexId x, VertexId y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (!g.adjacent(x, y)) {
    throw Error(ErrorKind::NotAnEdge, "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  }
  EdgeNeighborhood nb;
  nb.x = x;
  nb.y = y;
  std::vector<std::uint8_t> mark(g.order(), 0);  // bit 0: ~x, bit 1: ~y
  for (VertexId v : g.neighbors(x)) mark[v] |= 1;
  for (VertexId v : g.neighbors(y)) mark[v] |= 2;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (v == x || v == y) continue;
    switch (mark[v]) {
      case 3: nb.delta.push_back(v); break;
      case 1: nb.nx.push_back(v); break;
      case 2: nb.ny.push_back(v); break;
      default: nb.pxy.push_back(v); break;
    }
  }
  return nb;
}

std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

RegularityClass classify_regularity(const Graph& g) {
  RegularityClass rc;
  rc.connected = g.is_connected();
  const auto degree = g.regular_degree();
  if (!degree) return rc;
  rc.kind = RegularityClass::Kind::Regular;
  rc.degree = *degree;
  const std::size_t n = g.order();
  const std::size_t d = *degree;
  if (d == 0 || d + 1 == n) return rc;  // empty or complete

  std::optional<std::size_t> alpha, beta;
  std::size_t diameter = 0;
  bool consistent = true;
  for (VertexId u = 0; u < n && consistent; ++u) {
    const auto dist = bfs_distances(g, u);
    for (VertexId v = u + 1; v < n; ++v) {
      if (dist[v] == kUnreachable) continue;
      diameter = std::max<std::size_t>(diameter, dist[v]);
      if (dist[v] > 2) continue;
      const std::size_t c = common_neighbor_count(g, u, v);
      auto& slot = dist[v] == 1 ? alpha : beta;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        consistent = false;
        break;
      }
    }
  }
  if (!consistent || !alpha || !beta) return rc;
  rc.params = SrgParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d),
                        static_cast<std::int64_t>(*alpha), static_cast<std::int64_t>(*beta)};
  rc.kind = (rc.connected && diameter <= 2) ? RegularityClass::Kind::StronglyRegular
                                             : RegularityClass::Kind::AmplyRegular;
  return rc;
}

NeighborProfile neighbor_profile(const Graph& g, const SrgParams& params, VertexId x, VertexId y,
                                 VertexId v) {
  const auto nb = decompose_edge(g, x, y);
  if (!std::binary_search(nb.nx.begin(), nb.nx.end(), v)) {
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " is not in N_x");
  }
  auto count_in = [&](const std::vector<VertexId>& part) {
    std::int64_t c = 0;
    for (VertexId w : g.neighbors(v)) c += std::binary_search(part.begin(), part.end(), w) ? 1 : 0;
    return c;
  };
  NeighborProfile p;
  p.ell = count_in(nb.ny);
  p.in_delta = params.beta - 1 - p.ell;
  p.in_nx = params.alpha - params.beta + 1 + p.ell;
  p.in_pxy = params.d - params.alpha - 1 - p.ell;
  const NeighborProfile observed{p.ell, count_in(nb.delta), count_in(nb.nx), count_in(nb.pxy)};
  if (observed != p) {
    std::ostringstream os;
    os << "neighbor counts of v=" << v << " (" << observed.in_delta << "," << observed.in_nx << ","
       << observed.in_pxy << ") disagree with parameters " << params.to_string();
    throw Error(ErrorKind::NotAmplyRegular, os.str());
  }
  return p;
}

NeighborProfile neighbor_profile(const Graph& g, VertexId x, VertexId y, VertexId v) {
  const auto rc = classify_regularity(g);
  if (!rc.is_amply_regular()) throw Error(ErrorKind::NotAmplyRegular, "graph is " + rc.to_string());
  return neighbor_profile(g, *rc.params, x, y, v);
}

IdentityCheck parameter_identity_check(const Graph& g) {
  const auto rc = classify_regularity(g);
  if (!rc.is_amply_regular()) throw Error(ErrorKind::NotAmplyRegular, "graph is " + rc.to_string());
  const auto& p = *rc.params;
  IdentityCheck c;
  c.lhs = p.d * (p.d - p.alpha - 1);
  c.rhs = (p.n - p.d - 1) * p.beta;
  c.relation = c.lhs < c.rhs ? IdentityRelation::Strict
                             : (c.lhs == c.rhs ? IdentityRelation::Equal : IdentityRelation::Violated);
  return c;
}

}  // namespace curv
