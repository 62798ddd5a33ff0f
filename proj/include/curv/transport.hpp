#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

// Finitely supported probability measure: distinct vertices, positive
// masses, total exactly 1. Support is kept sorted by vertex.
class ProbabilityMeasure {
 public:
  // Throws InvalidMeasure when the invariants fail.
  explicit ProbabilityMeasure(std::vector<std::pair<VertexId, Rational>> support);

  static ProbabilityMeasure point_mass(VertexId v);
  // Uniform on the given distinct vertices.
  static ProbabilityMeasure uniform(std::vector<VertexId> vertices);
  // Lazy random walk: mass p at x, (1-p)/deg(x) on each neighbor.
  static ProbabilityMeasure lazy_walk(const Graph& g, VertexId x, const Rational& idleness);

  const std::vector<std::pair<VertexId, Rational>>& support() const { return support_; }

 private:
  std::vector<std::pair<VertexId, Rational>> support_;
};

struct TransportEntry {
  VertexId source = 0;
  VertexId target = 0;
  Rational mass;
};

struct TransportPlan {
  std::vector<TransportEntry> entries;  // sorted by (source, target), positive masses
  Rational total_cost;
};

struct WassersteinResult {
  Rational distance;
  TransportPlan plan;
};

// Exact W1 by successive-shortest-path min-cost flow on integer supplies
// (masses scaled by the common denominator). Throws InfiniteDistance when
// the supports lie in different components.
WassersteinResult wasserstein_w1(const Graph& g, const ProbabilityMeasure& mu1, const ProbabilityMeasure& mu2);

// 1 - W1(mu_x^p, mu_y^p) for an edge xy. Throws InvalidIdleness for p
// outside [0,1] and NotAnEdge.
Rational ollivier_kappa_p(const Graph& g, VertexId x, VertexId y, const Rational& idleness);

struct CurvatureReport {
  Edge edge;
  Rational kappa;
  std::size_t delta_size = 0;
  Rational upper_bound;  // (2 + |delta|) / d
  bool sharp = false;    // kappa == upper_bound
  std::int64_t min_cost = 0;
  // Lexicographically smallest optimal bijection N_x -> N_y, when requested.
  std::optional<std::vector<Edge>> witness;
};

struct CurvatureOptions {
  bool witness = false;
};

// Lin-Lu-Yau curvature of an edge of a regular graph via the optimal
// bijection between the exclusive neighborhoods; distances capped at 3.
// Throws NotRegular or NotAnEdge.
CurvatureReport lly_curvature(const Graph& g, VertexId x, VertexId y, CurvatureOptions options = {});

struct CurvatureSpectrum {
  std::vector<CurvatureReport> reports;  // one per edge, sorted edge order
  Rational min_kappa;
};

// Throws Disconnected or NotRegular.
CurvatureSpectrum curvature_spectrum(const Graph& g, unsigned threads = 1, CurvatureOptions options = {});

}  // namespace curv
