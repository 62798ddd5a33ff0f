#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

// (u + v sqrt(D)) / w with w > 0, D >= 0 square-free-agnostic. When D is a
// perfect square the value is folded into u and v = 0, D = 0.
struct QuadraticSurd {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t w = 1;
  std::int64_t radicand = 0;

  static QuadraticSurd make(std::int64_t u, std::int64_t v, std::int64_t w, std::int64_t radicand);

  bool is_rational() const { return v == 0; }
  std::optional<Rational> as_rational() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

// Exact integer square root when x is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t x);

struct SpectrumReport {
  SrgParams params;
  // Normalized Laplacian eigenvalues 0 < lambda2 <= lambda3 with
  // multiplicities 1, m2, m3.
  QuadraticSurd lambda2;
  QuadraticSurd lambda3;
  std::int64_t m1 = 1;
  std::int64_t m2 = 0;
  std::int64_t m3 = 0;
  std::int64_t radicand = 0;  // (alpha-beta)^2 + 4(d-beta)
};

// Closed-form spectrum of a strongly regular graph with these parameters.
// Throws NotSrgParameters when d(d-alpha-1) != (n-d-1)beta and
// InfeasibleParameters when m2, m3 are not positive integers. The
// conference degeneracy 2d + (n-1)(alpha-beta) = 0 gives m2 = m3 = (n-1)/2.
SpectrumReport srg_spectrum(const SrgParams& params);

// Entrywise A^2 = dI + alpha A + beta (J - I - A). False for graphs that are
// not d-regular. Throws InvalidParams when params.n != g.order().
bool verify_srg_identity(const Graph& g, const SrgParams& params, unsigned threads = 1);

// Smallest non-zero eigenvalue of I - D^{-1/2} A D^{-1/2}. Throws
// Disconnected, or InvalidParams for fewer than two vertices.
double numerical_lambda2(const Graph& g);

inline constexpr double kLambdaTolerance = 1e-9;

struct SharpnessReport {
  Rational min_kappa;
  std::optional<QuadraticSurd> lambda2_exact;  // when g is strongly regular
  double lambda2 = 0.0;
  bool sharp = false;  // min_kappa == lambda2
  std::optional<Rational> bound_kappa;  // (2+alpha)/d for amply regular g
};

// Lichnerowicz sharpness: exact comparison when the spectrum is known in
// closed form, otherwise |min_kappa - lambda2| < 1e-9.
SharpnessReport lichnerowicz_report(const Graph& g, unsigned threads = 1);

enum class SharpFamily { A, B, C };  // (n,a+4,a,a), (n,a+3,a,a+1), (n,a+2,a,a+2)

struct SharpCandidate {
  SrgParams params;
  SharpFamily family;
  bool lambda2_matches_bound = false;  // lambda2 == (2+alpha)/d exactly
};

// Parameters with beta >= alpha allowing lambda2 <= (2+alpha)/d: d in
// [alpha+2, alpha+4], d <= 2alpha - beta + 4, integral n, perfect-square
// discriminant and positive integral multiplicities. Families A and B are
// bounded by max_alpha, family C (cocktail party) by k <= max_k.
std::vector<SharpCandidate> enumerate_sharp_candidates(std::int64_t max_alpha, std::int64_t max_k);

}  // namespace curv
