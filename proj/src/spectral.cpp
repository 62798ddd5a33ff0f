#include "curv/spectral.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "curv/error.hpp"
#include "curv/parallel.hpp"
#include "curv/transport.hpp"

namespace curv {

using i64 = std::int64_t;

std::optional<i64> exact_sqrt(i64 x) {
  if (x < 0) return std::nullopt;
  auto r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  if (r * r != x) return std::nullopt;
  return r;
}

QuadraticSurd QuadraticSurd::make(i64 u, i64 v, i64 w, i64 radicand) {
  if (w == 0) throw Error(ErrorKind::InvalidParams, "zero denominator");
  if (radicand < 0) throw Error(ErrorKind::InvalidParams, "negative radicand");
  if (const auto s = exact_sqrt(radicand)) {
    u += v * *s;
    v = 0;
  }
  if (v == 0) radicand = 0;
  if (w < 0) {
    u = -u;
    v = -v;
    w = -w;
  }
  const i64 g = std::gcd(std::gcd(u, v), w);
  return QuadraticSurd{u / g, v / g, w / g, radicand};
}

std::optional<Rational> QuadraticSurd::as_rational() const {
  if (v != 0) return std::nullopt;
  return Rational(u, w);
}

double QuadraticSurd::to_double() const {
  return (static_cast<double>(u) + static_cast<double>(v) * std::sqrt(static_cast<double>(radicand))) /
         static_cast<double>(w);
}

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  if (v == 0) {
    os << Rational(u, w);
    return os.str();
  }
  os << "(" << u << (v < 0 ? " - " : " + ");
  if (std::abs(v) != 1) os << std::abs(v) << "*";
  os << "sqrt(" << radicand << "))/" << w;
  return os.str();
}

SpectrumReport srg_spectrum(const SrgParams& params) {
  params.validate();
  if (!params.satisfies_identity()) {
    throw Error(ErrorKind::NotSrgParameters, params.to_string() + " violate d(d-alpha-1) = (n-d-1)beta");
  }
  const i64 n = params.n, d = params.d, a = params.alpha, b = params.beta;
  SpectrumReport r;
  r.params = params;
  r.radicand = (a - b) * (a - b) + 4 * (d - b);
  r.lambda2 = QuadraticSurd::make(2 * d - (a - b), -1, 2 * d, r.radicand);
  r.lambda3 = QuadraticSurd::make(2 * d - (a - b), 1, 2 * d, r.radicand);

  const i64 e = 2 * d + (n - 1) * (a - b);
  auto infeasible = [&](const std::string& why) {
    return Error(ErrorKind::InfeasibleParameters, params.to_string() + ": " + why);
  };
  if (e == 0) {
    if ((n - 1) % 2 != 0) throw infeasible("(n-1)/2 is not an integer");
    r.m2 = r.m3 = (n - 1) / 2;
  } else {
    const auto s = exact_sqrt(r.radicand);
    if (!s || *s == 0) throw infeasible("irrational multiplicities");
    if (e % *s != 0) throw infeasible("non-integral multiplicities");
    const i64 twice2 = (n - 1) - e / *s;
    const i64 twice3 = (n - 1) + e / *s;
    if (twice2 % 2 != 0 || twice3 % 2 != 0) throw infeasible("non-integral multiplicities");
    r.m2 = twice2 / 2;
    r.m3 = twice3 / 2;
  }
  if (r.m2 <= 0 || r.m3 <= 0) throw infeasible("non-positive multiplicity");
  return r;
}

bool verify_srg_identity(const Graph& g, const SrgParams& params, unsigned threads) {
  if (params.n != static_cast<i64>(g.order())) {
    throw Error(ErrorKind::InvalidParams, "graph has " + std::to_string(g.order()) + " vertices, params say " +
                                              std::to_string(params.n));
  }
  const auto degree = g.regular_degree();
  if (!degree || static_cast<i64>(*degree) != params.d) return false;
  const std::size_t n = g.order();
  std::vector<char> row_ok(n, 1);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto u = static_cast<VertexId>(i);
    for (VertexId v = 0; v < n; ++v) {
      if (v == u) continue;
      const auto common = static_cast<i64>(common_neighbor_count(g, u, v));
      if (common != (g.adjacent(u, v) ? params.alpha : params.beta)) {
        row_ok[i] = 0;
        return;
      }
    }
  });
  return std::all_of(row_ok.begin(), row_ok.end(), [](char c) { return c != 0; });
}

double numerical_lambda2(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw Error(ErrorKind::InvalidParams, "lambda2 needs at least two vertices");
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "lambda2 of a disconnected graph is 0");
  Eigen::VectorXd inv_sqrt(n);
  for (std::size_t v = 0; v < n; ++v) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) lap(u, v) = -inv_sqrt[u] * inv_sqrt[v];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::InvalidParams, "eigensolver did not converge");
  return solver.eigenvalues()[1];
}

SharpnessReport lichnerowicz_report(const Graph& g, unsigned threads) {
  SharpnessReport r;
  r.min_kappa = curvature_spectrum(g, threads).min_kappa;
  const auto cls = classify_regularity(g);
  if (cls.is_amply_regular()) r.bound_kappa = Rational(2 + cls.params->alpha, cls.params->d);
  if (cls.is_strongly_regular()) {
    r.lambda2_exact = srg_spectrum(*cls.params).lambda2;
    r.lambda2 = r.lambda2_exact->to_double();
    const auto exact = r.lambda2_exact->as_rational();
    r.sharp = exact && *exact == r.min_kappa;
  } else {
    r.lambda2 = numerical_lambda2(g);
    r.sharp = std::abs(r.min_kappa.to_double() - r.lambda2) < kLambdaTolerance;
  }
  return r;
}

std::vector<SharpCandidate> enumerate_sharp_candidates(i64 max_alpha, i64 max_k) {
  if (max_alpha < 0 || max_k < 0) throw Error(ErrorKind::InvalidParams, "bounds must be non-negative");
  std::vector<SharpCandidate> out;
  // Family C has alpha = 2k - 4.
  const i64 alpha_limit = std::max(max_alpha, 2 * max_k - 4);
  for (i64 a = 0; a <= alpha_limit; ++a) {
    for (i64 b = std::max<i64>(a, 1); b <= a + 2; ++b) {
      for (i64 d = a + 2; d <= a + 4; ++d) {
        if (d > 2 * a - b + 4 || b > d) continue;
        const i64 top = d * (d - a - 1);
        if (top % b != 0) continue;
        const SrgParams p{d + 1 + top / b, d, a, b};
        if (!exact_sqrt((a - b) * (a - b) + 4 * (d - b))) continue;
        SpectrumReport spec;
        try {
          spec = srg_spectrum(p);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::InfeasibleParameters) continue;
          throw;
        }
        const auto lambda2 = *spec.lambda2.as_rational();
        const Rational bound(2 + a, d);
        if (lambda2 > bound) continue;
        const SharpFamily family = d - a == 4 ? SharpFamily::A : (d - a == 3 ? SharpFamily::B : SharpFamily::C);
        if (family == SharpFamily::C ? (p.n / 2 > max_k) : (a > max_alpha)) continue;
        out.push_back({p, family, lambda2 == bound});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SharpCandidate& x, const SharpCandidate& y) {
    return std::pair(x.family, x.params) < std::pair(y.family, y.params);
  });
  return out;
}

}  // namespace curv
