#include "curv/transport.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "curv/assignment.hpp"
#include "curv/error.hpp"
#include "curv/parallel.hpp"

namespace curv {

ProbabilityMeasure::ProbabilityMeasure(std::vector<std::pair<VertexId, Rational>> support)
    : support_(std::move(support)) {
  std::sort(support_.begin(), support_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational total;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i > 0 && support_[i].first == support_[i - 1].first) {
      throw Error(ErrorKind::InvalidMeasure, "vertex " + std::to_string(support_[i].first) + " listed twice");
    }
    if (support_[i].second.sign() <= 0) throw Error(ErrorKind::InvalidMeasure, "masses must be positive");
    total += support_[i].second;
  }
  if (total != Rational(1)) throw Error(ErrorKind::InvalidMeasure, "masses sum to " + total.to_string());
}

ProbabilityMeasure ProbabilityMeasure::point_mass(VertexId v) { return ProbabilityMeasure({{v, Rational(1)}}); }

ProbabilityMeasure ProbabilityMeasure::uniform(std::vector<VertexId> vertices) {
  const Rational mass(1, static_cast<std::int64_t>(vertices.size()));
  std::vector<std::pair<VertexId, Rational>> support;
  for (VertexId v : vertices) support.emplace_back(v, mass);
  return ProbabilityMeasure(std::move(support));
}

ProbabilityMeasure ProbabilityMeasure::lazy_walk(const Graph& g, VertexId x, const Rational& idleness) {
  if (idleness < Rational(0) || idleness > Rational(1)) {
    throw Error(ErrorKind::InvalidIdleness, "idleness " + idleness.to_string() + " outside [0,1]");
  }
  if (x >= g.order()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x) + " out of range");
  std::vector<std::pair<VertexId, Rational>> support;
  if (idleness.sign() > 0) support.emplace_back(x, idleness);
  const auto deg = static_cast<std::int64_t>(g.degree(x));
  if (idleness != Rational(1)) {
    if (deg == 0) throw Error(ErrorKind::InvalidMeasure, "isolated vertex cannot spread mass");
    const Rational share = (Rational(1) - idleness) / Rational(deg);
    for (VertexId v : g.neighbors(x)) support.emplace_back(v, share);
  }
  return ProbabilityMeasure(std::move(support));
}

namespace {

// Successive shortest paths with Dijkstra on reduced costs. Small dense
// networks only: node count is the size of the two supports plus two.
class MinCostFlow {
 public:
  explicit MinCostFlow(std::size_t nodes) : graph_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity, std::int64_t cost) {
    graph_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity, cost});
    graph_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0, -cost});
    return arcs_.size() - 2;
  }

  // Sends up to `limit` units; returns (flow, cost).
  std::pair<std::int64_t, std::int64_t> run(std::size_t s, std::size_t t, std::int64_t limit) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    const std::size_t n = graph_.size();
    std::vector<std::int64_t> potential(n, 0);
    std::int64_t flow = 0, cost = 0;
    while (flow < limit) {
      std::vector<std::int64_t> dist(n, kInf);
      std::vector<std::size_t> via(n, SIZE_MAX);
      std::vector<bool> done(n, false);
      dist[s] = 0;
      for (;;) {
        std::size_t u = SIZE_MAX;
        for (std::size_t v = 0; v < n; ++v) {
          if (!done[v] && dist[v] < kInf && (u == SIZE_MAX || dist[v] < dist[u])) u = v;
        }
        if (u == SIZE_MAX) break;
        done[u] = true;
        for (std::size_t a : graph_[u]) {
          const Arc& arc = arcs_[a];
          if (arc.capacity <= 0) continue;
          const std::int64_t nd = dist[u] + arc.cost + potential[u] - potential[arc.to];
          if (nd < dist[arc.to]) {
            dist[arc.to] = nd;
            via[arc.to] = a;
          }
        }
      }
      if (dist[t] >= kInf) break;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] < kInf) potential[v] += dist[v];
      }
      std::int64_t push = limit - flow;
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].capacity);
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].capacity -= push;
        arcs_[via[v] ^ 1].capacity += push;
        cost += push * arcs_[via[v]].cost;
      }
      flow += push;
    }
    return {flow, cost};
  }

  std::int64_t flow_on(std::size_t arc) const { return arcs_[arc ^ 1].capacity; }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t capacity;
    std::int64_t cost;
  };
  std::vector<std::vector<std::size_t>> graph_;
  std::vector<Arc> arcs_;
};

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::TooLarge, "scaled transport supply exceeds 64 bits");
  return z.get_si();
}

void require_edge(const Graph& g, VertexId x, VertexId y) {
  if (x >= g.order() || y >= g.order()) {
    throw Error(ErrorKind::InvalidVertex, "vertex out of range for n=" + std::to_string(g.order()));
  }
  if (!g.adjacent(x, y)) {
    throw Error(ErrorKind::NotAnEdge, "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  }
}

}  // namespace

WassersteinResult wasserstein_w1(const Graph& g, const ProbabilityMeasure& mu1, const ProbabilityMeasure& mu2) {
  const auto& src = mu1.support();
  const auto& dst = mu2.support();
  for (const auto* s : {&src, &dst}) {
    for (const auto& [v, mass] : *s) {
      if (v >= g.order()) throw Error(ErrorKind::InvalidVertex, "measure supported outside the graph");
    }
  }
  mpz_class scale = 1;
  for (const auto* s : {&src, &dst}) {
    for (const auto& entry : *s) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), entry.second.denominator().get_mpz_t());
  }
  const std::int64_t total = to_int64(scale);
  auto scaled = [&](const Rational& mass) { return to_int64(mass.numerator() * (scale / mass.denominator())); };

  std::vector<std::vector<std::uint32_t>> dist;
  dist.reserve(src.size());
  for (const auto& [u, mass] : src) dist.push_back(bfs_distances(g, u));

  const std::size_t k1 = src.size(), k2 = dst.size();
  const std::size_t s = k1 + k2, t = s + 1;
  MinCostFlow flow(k1 + k2 + 2);
  std::vector<std::vector<std::size_t>> arc_of(k1, std::vector<std::size_t>(k2));
  for (std::size_t i = 0; i < k1; ++i) flow.add_arc(s, i, scaled(src[i].second), 0);
  for (std::size_t j = 0; j < k2; ++j) flow.add_arc(k1 + j, t, scaled(dst[j].second), 0);
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k2; ++j) {
      const std::uint32_t d = dist[i][dst[j].first];
      if (d == kUnreachable) {
        throw Error(ErrorKind::InfiniteDistance, "vertices " + std::to_string(src[i].first) + " and " +
                                                     std::to_string(dst[j].first) + " are disconnected");
      }
      arc_of[i][j] = flow.add_arc(i, k1 + j, total, d);
    }
  }
  const auto [sent, cost] = flow.run(s, t, total);
  if (sent != total) throw Error(ErrorKind::InvalidMeasure, "transport flow incomplete");  // unreachable

  WassersteinResult result;
  const Rational unit(mpq_class(mpz_class(1), scale));
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k2; ++j) {
      const std::int64_t f = flow.flow_on(arc_of[i][j]);
      if (f > 0) result.plan.entries.push_back({src[i].first, dst[j].first, Rational(f) * unit});
    }
  }
  result.distance = Rational(cost) * unit;
  result.plan.total_cost = result.distance;
  return result;
}

Rational ollivier_kappa_p(const Graph& g, VertexId x, VertexId y, const Rational& idleness) {
  if (idleness < Rational(0) || idleness > Rational(1)) {
    throw Error(ErrorKind::InvalidIdleness, "idleness " + idleness.to_string() + " outside [0,1]");
  }
  require_edge(g, x, y);
  const auto w1 = wasserstein_w1(g, ProbabilityMeasure::lazy_walk(g, x, idleness),
                                 ProbabilityMeasure::lazy_walk(g, y, idleness));
  return Rational(1) - w1.distance;
}

CurvatureReport lly_curvature(const Graph& g, VertexId x, VertexId y, CurvatureOptions options) {
  const auto degree = g.regular_degree();
  if (!degree) throw Error(ErrorKind::NotRegular, "curvature via optimal bijection needs a regular graph");
  require_edge(g, x, y);
  const auto d = static_cast<std::int64_t>(*degree);
  const auto nb = decompose_edge(g, x, y);
  const std::size_t m = nb.nx.size();

  std::vector<std::vector<std::int64_t>> cost(m, std::vector<std::int64_t>(m, 3));
  for (std::size_t i = 0; i < m; ++i) {
    const auto dist = bfs_distances(g, nb.nx[i], 2);
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint32_t dv = dist[nb.ny[j]];
      if (dv != kUnreachable) cost[i][j] = dv;
    }
  }
  const AssignmentResult best = options.witness ? lexicographic_optimal_assignment(cost) : solve_assignment(cost);

  CurvatureReport report;
  report.edge = {x, y};
  report.min_cost = best.cost;
  report.kappa = Rational(d + 1 - best.cost, d);
  report.delta_size = nb.delta.size();
  report.upper_bound = Rational(2 + static_cast<std::int64_t>(nb.delta.size()), d);
  report.sharp = report.kappa == report.upper_bound;
  if (options.witness) {
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < m; ++i) pairs.emplace_back(nb.nx[i], nb.ny[best.column_of_row[i]]);
    report.witness = std::move(pairs);
  }
  return report;
}

CurvatureSpectrum curvature_spectrum(const Graph& g, unsigned threads, CurvatureOptions options) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "curvature spectrum needs a connected graph");
  if (!g.regular_degree()) throw Error(ErrorKind::NotRegular, "curvature spectrum needs a regular graph");
  const auto edges = g.edges();
  CurvatureSpectrum out;
  out.reports.resize(edges.size());
  parallel_for(edges.size(), threads,
               [&](std::size_t i) { out.reports[i] = lly_curvature(g, edges[i].first, edges[i].second, options); });
  if (!out.reports.empty()) {
    out.min_kappa = out.reports.front().kappa;
    for (const auto& r : out.reports) out.min_kappa = std::min(out.min_kappa, r.kappa);
  }
  return out;
}

}  // namespace curv
