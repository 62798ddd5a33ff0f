#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

// Sufficient parameter conditions for kappa = (2+alpha)/d on every edge of
// an amply regular graph, each decided in exact integer arithmetic.
struct ConditionReport {
  SrgParams params;
  bool cond1 = false;  // beta = alpha+1, n < 3d-2alpha, d > alpha + sqrt(6alpha+1/4) + 3/2
  bool cond2 = false;  // beta = alpha+2, n < 3d-2alpha, d >= alpha + sqrt(10alpha+41/4) + 3/2
  bool cond3 = false;  // beta > alpha+2, n < 3d-2alpha, |d - 3beta/2| >= sqrt(4a^2-3b^2+4a+24b-20)/2
  bool cond4 = false;  // beta >= (2/sqrt3) alpha + 7, n < 3d-2alpha
  bool cond5 = false;  // beta <= alpha, 2n < 5d-3alpha, and two bounds on d and alpha
  bool hlx = false;    // d <= 2beta - alpha - 1
  bool ll = false;     // alpha = 0 and beta >= 2
  bool any_holds = false;
};

ConditionReport evaluate_conditions(const SrgParams& params);

// Which bound stands in for the common-neighbor count in P_xy.
enum class PxyBound {
  Exact,    // |P_xy| = n - 2d + alpha slots
  Relaxed,  // d - alpha - 1 slots, valid when n - 2d + alpha <= d - alpha - 1
};

// a2 X^2 + a1 X + a0 <= 0 must hold for the number X of edges between a
// Hall violator S of size b in N_x and its neighborhood in N_y. The
// coefficients sum the Cauchy lower bounds on common-neighbor counts in
// Delta_xy, P_xy, N_y and N_x and compare them with C(b,2) max(alpha,beta).
struct ObstructionQuadratic {
  std::int64_t b = 0;
  Rational a2, a1, a0;
  Rational discriminant;  // a1^2 - 4 a2 a0
  bool feasible = true;   // some real X satisfies the inequality
};

// Throws UseBOneCheck for b < 2 and DegenerateParameters unless
// alpha >= 1, d - alpha - 1 >= 1 and the chosen P_xy slot count is >= 1.
ObstructionQuadratic obstruction_quadratic(const SrgParams& params, std::int64_t b,
                                           PxyBound bound = PxyBound::Exact);

enum class Condition { Cond1, Cond2, Cond3, Cond4, Cond5, Hlx, Ll };
std::string to_string(Condition c);

// How a Hall violator of size 1 (a vertex of N_x with no neighbor in N_y)
// is excluded, or how the whole sweep is short-circuited.
enum class SingletonRule {
  BetaExceedsAlphaPlusOne,  // it would need beta - 1 > alpha neighbors in Delta_xy
  PxyTooSmall,              // it would need d - alpha - 1 > |P_xy| neighbors in P_xy
  ParityContradiction,      // beta = alpha+1 and |P_xy| = d-alpha-1: 2p = d-alpha-1 and 2q = d-alpha-2
  EmptyPxy,                 // every vertex of N_x sees all of N_y
  EmptyNx,                  // nothing to match
};
std::string to_string(SingletonRule r);

struct SharpByCondition {
  Condition which;
};

struct SharpByDiscriminantSweep {
  SingletonRule singleton_rule;
  std::vector<ObstructionQuadratic> transcript;  // b = 2 .. floor((d-alpha)/2)
};

struct Inconclusive {
  std::string reason;
  std::optional<std::int64_t> failing_b;
};

struct Certificate {
  SrgParams params;
  ConditionReport conditions;
  std::variant<SharpByCondition, SharpByDiscriminantSweep, Inconclusive> outcome;
  std::optional<Rational> certified_kappa;  // (2+alpha)/d exactly when sharp

  bool sharp() const { return certified_kappa.has_value(); }
};

// Tries the conditions first, then the discriminant sweep.
Certificate certify_curvature(const SrgParams& params);

// The sweep alone, independent of the conditions. Returns either
// SharpByDiscriminantSweep or Inconclusive.
std::variant<SharpByDiscriminantSweep, Inconclusive> discriminant_sweep(const SrgParams& params);

struct ScanRow {
  SrgParams params;
  bool multiplicities_integral = true;
  bool identity_holds = true;
  ConditionReport conditions;
  bool sweep_sharp = false;
  bool conference = false;
  std::optional<Rational> certified_kappa;
};

inline constexpr std::int64_t kMaxScanOrder = 4096;

// Every (n,d,alpha,beta) with 3 <= n <= max_n, beta >= 1, satisfying the
// SRG identity with positive integral eigenvalue multiplicities, sorted.
// Throws InvalidParams for max_n > 4096.
std::vector<ScanRow> scan_parameters(std::int64_t max_n, unsigned threads = 1);

std::string scan_csv_header();
std::string to_csv_line(const ScanRow& row);
// Parses the rows of a CSV produced by the scanner; '#' lines are skipped.
std::vector<ScanRow> read_scan_csv(const std::string& text);

}  // namespace curv
