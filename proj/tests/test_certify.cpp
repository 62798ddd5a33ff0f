#include <doctest.h>

#include <cmath>
#include <set>

#include "curv/certify.hpp"
#include "curv/error.hpp"
#include "curv/generators.hpp"
#include "curv/transport.hpp"

using namespace curv;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

// Value of the summed bounds at X, straight from the term list.
Rational master_value(const SrgParams& p, std::int64_t b, const Rational& x, bool exact) {
  const std::int64_t m = p.d - p.alpha - 1;
  const std::int64_t slots = exact ? p.n - 2 * p.d + p.alpha : m;
  auto term = [&](const Rational& linear, std::int64_t den) {
    return Rational(1, 2) * (linear * linear / Rational(den) - linear);
  };
  const Rational bb(b);
  Rational v = term(Rational(p.beta - 1) * bb - x, p.alpha) + term(Rational(m) * bb - x, slots) + term(x, b - 1) +
               term(Rational(p.alpha - p.beta + 1) * bb + x, m);
  const Rational pairs(b * (b - 1) / 2);
  return v + pairs - pairs * Rational(std::max(p.alpha, p.beta));
}

// Floating evaluation of the printed inequalities; only trusted away from
// the boundary.
struct FloatConditions {
  std::optional<bool> c1, c2, c3, c4;
};

FloatConditions float_conditions(const SrgParams& p) {
  const double n = p.n, d = p.d, a = p.alpha, b = p.beta;
  const bool small_n = n < 3 * d - 2 * a;
  FloatConditions f;
  auto decide = [](double lhs, double rhs, bool strict) -> std::optional<bool> {
    if (std::abs(lhs - rhs) < 1e-7) return std::nullopt;
    return strict ? lhs > rhs : lhs >= rhs;
  };
  auto guarded = [&](bool pre, std::optional<bool> v) -> std::optional<bool> {
    if (!pre) return false;
    return v;
  };
  f.c1 = guarded(p.beta == p.alpha + 1 && small_n, decide(d, a + std::sqrt(6 * a + 0.25) + 1.5, true));
  f.c2 = guarded(p.beta == p.alpha + 2 && small_n, decide(d, a + std::sqrt(10 * a + 41.0 / 4) + 1.5, false));
  const double rad = 4 * a * a - 3 * b * b + 4 * a + 24 * b - 20;
  f.c3 = guarded(p.beta > p.alpha + 2 && small_n && rad >= 0, decide(std::abs(d - 1.5 * b), std::sqrt(rad) / 2, false));
  f.c4 = guarded(small_n, decide(b, 2 / std::sqrt(3.0) * a + 7, false));
  return f;
}

}  // namespace

TEST_CASE("evaluate_conditions examples") {
  const auto c29 = evaluate_conditions({29, 14, 6, 7});
  CHECK(c29.cond1);
  CHECK(c29.any_holds);
  const auto c25 = evaluate_conditions({25, 12, 5, 6});
  CHECK_FALSE(c25.cond1);
  const auto mcl = evaluate_conditions({275, 112, 30, 56});
  CHECK(mcl.cond4);
  const auto rook = evaluate_conditions({16, 6, 2, 2});
  CHECK_FALSE((rook.cond1 || rook.cond2 || rook.cond3 || rook.cond4 || rook.cond5));
  CHECK_FALSE(rook.any_holds);
  const auto pet = evaluate_conditions({10, 3, 0, 1});
  CHECK_FALSE(pet.ll);
  CHECK(evaluate_conditions({16, 5, 0, 2}).ll);
  CHECK(evaluate_conditions({8, 6, 4, 6}).hlx);
  CHECK(kind_of([] { evaluate_conditions({5, 5, 0, 0}); }) == ErrorKind::InvalidParams);
}

TEST_CASE("integer condition tests agree with the printed real inequalities") {
  for (const auto& row : scan_parameters(600)) {
    const auto r = row.conditions;
    const auto f = float_conditions(row.params);
    if (f.c1) CHECK_MESSAGE(r.cond1 == *f.c1, row.params.to_string());
    if (f.c2) CHECK_MESSAGE(r.cond2 == *f.c2, row.params.to_string());
    if (f.c3) CHECK_MESSAGE(r.cond3 == *f.c3, row.params.to_string());
    if (f.c4) CHECK_MESSAGE(r.cond4 == *f.c4, row.params.to_string());
    CHECK(r.any_holds == (r.cond1 || r.cond2 || r.cond3 || r.cond4 || r.cond5 || r.hlx || r.ll));
    if (r.cond1) CHECK(row.params.beta == row.params.alpha + 1);
    if (r.cond2) CHECK(row.params.beta == row.params.alpha + 2);
  }
}

TEST_CASE("obstruction quadratic at (324,152,70,72) reproduces the displayed coefficients") {
  const SrgParams p{324, 152, 70, 72};
  const auto q2 = obstruction_quadratic(p, 2);
  CHECK(q2.a2 == Rational(1471, 2835));
  CHECK(q2.a1 == Rational(-10924, 2835));
  CHECK(q2.a0 == Rational(192364, 2835));
  CHECK_FALSE(q2.feasible);
  for (std::int64_t b = 2; b <= 41; ++b) {
    const auto q = obstruction_quadratic(p, b);
    CHECK(q.a2 == Rational(107, 5670) + Rational(1, 2 * (b - 1)));
    CHECK(q.a1 == -Rational(5462 * b, 2835));
    CHECK(q.a0 == Rational(104791 * b * b, 2835) - Rational(40 * b));
    CHECK(q.discriminant == q.a1 * q.a1 - Rational(4) * q.a2 * q.a0);
    CHECK_FALSE_MESSAGE(q.feasible, "b = " << b);
  }
}

TEST_CASE("relaxed coefficients for the conference case gamma = 5, b = 3") {
  const auto q = obstruction_quadratic({21, 10, 4, 5}, 3, PxyBound::Relaxed);
  CHECK(Rational(2) * q.a2 == Rational(23, 20));
  CHECK(Rational(2) * q.a1 == Rational(-12));
  CHECK(Rational(2) * q.a0 == Rational(30));
}

TEST_CASE("coefficients agree with direct evaluation of the bounds") {
  for (const auto& row : scan_parameters(200)) {
    const auto& p = row.params;
    if (p.alpha < 1 || p.d - p.alpha - 1 < 1 || p.n - 2 * p.d + p.alpha < 1) continue;
    for (std::int64_t b = 2; b <= std::max<std::int64_t>(2, (p.d - p.alpha) / 2); ++b) {
      for (bool exact : {true, false}) {
        const auto q = obstruction_quadratic(p, b, exact ? PxyBound::Exact : PxyBound::Relaxed);
        for (std::int64_t x : {0, 1, 7}) {
          const Rational X(x);
          CHECK(q.a2 * X * X + q.a1 * X + q.a0 == master_value(p, b, X, exact));
        }
        CHECK(q.feasible == (q.discriminant.sign() >= 0));
      }
    }
  }
}

TEST_CASE("obstruction quadratic errors") {
  CHECK(kind_of([] { obstruction_quadratic({324, 152, 70, 72}, 1); }) == ErrorKind::UseBOneCheck);
  CHECK(kind_of([] { obstruction_quadratic({10, 3, 0, 1}, 2); }) == ErrorKind::DegenerateParameters);
  CHECK(kind_of([] { obstruction_quadratic({6, 4, 2, 4}, 2); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("certify_curvature examples") {
  const auto c324 = certify_curvature({324, 152, 70, 72});
  REQUIRE(std::holds_alternative<SharpByDiscriminantSweep>(c324.outcome));
  const auto& sweep = std::get<SharpByDiscriminantSweep>(c324.outcome);
  CHECK(sweep.singleton_rule == SingletonRule::BetaExceedsAlphaPlusOne);
  CHECK(sweep.transcript.size() == 40);
  CHECK(*c324.certified_kappa == Rational(9, 19));

  const auto c16 = certify_curvature({16, 6, 2, 2});
  CHECK_FALSE(c16.sharp());
  REQUIRE(std::holds_alternative<Inconclusive>(c16.outcome));
  CHECK(std::get<Inconclusive>(c16.outcome).failing_b == std::optional<std::int64_t>(1));

  const auto c29 = certify_curvature({29, 14, 6, 7});
  REQUIRE(std::holds_alternative<SharpByCondition>(c29.outcome));
  CHECK(std::get<SharpByCondition>(c29.outcome).which == Condition::Cond1);
  CHECK(*c29.certified_kappa == Rational(4, 7));

  const auto c25 = certify_curvature({25, 12, 5, 6});
  REQUIRE(std::holds_alternative<SharpByDiscriminantSweep>(c25.outcome));
  CHECK(std::get<SharpByDiscriminantSweep>(c25.outcome).singleton_rule == SingletonRule::ParityContradiction);
  CHECK(*c25.certified_kappa == Rational(7, 12));

  const auto mcl = certify_curvature({275, 112, 30, 56});
  REQUIRE(std::holds_alternative<SharpByCondition>(mcl.outcome));
  CHECK(std::get<SharpByCondition>(mcl.outcome).which == Condition::Cond4);
}

TEST_CASE("certificates are sound on every catalog graph") {
  int certified = 0;
  for (const auto& entry : named_catalog()) {
    const auto cls = classify_regularity(entry.graph);
    if (!cls.is_amply_regular() || !cls.connected) continue;
    const auto cert = certify_curvature(*cls.params);
    CHECK(cert.sharp() == cert.certified_kappa.has_value());
    if (!cert.sharp()) continue;
    ++certified;
    CHECK(*cert.certified_kappa == Rational(2 + cls.params->alpha, cls.params->d));
    for (const auto& [x, y] : entry.graph.edges()) {
      CHECK_MESSAGE(lly_curvature(entry.graph, x, y).kappa == *cert.certified_kappa, entry.name);
    }
  }
  CHECK(certified > 5);
}

TEST_CASE("scan examples") {
  auto find = [](const std::vector<ScanRow>& rows, SrgParams p) -> const ScanRow* {
    for (const auto& r : rows)
      if (r.params == p) return &r;
    return nullptr;
  };
  const auto r16 = scan_parameters(16);
  const ScanRow* rook = find(r16, {16, 6, 2, 2});
  REQUIRE(rook != nullptr);
  CHECK_FALSE(rook->conditions.any_holds);

  const auto r29 = scan_parameters(29);
  const ScanRow* conf = find(r29, {29, 14, 6, 7});
  REQUIRE(conf != nullptr);
  CHECK(conf->conditions.cond1);
  CHECK(conf->conference);

  const auto r512 = scan_parameters(512);
  const ScanRow* mcl = find(r512, {275, 112, 30, 56});
  REQUIRE(mcl != nullptr);
  CHECK(mcl->conditions.cond4);
  for (const auto& r : r512) {
    if (r.conference && r.params.gamma() > 6) CHECK_MESSAGE(r.conditions.cond1, r.params.to_string());
    CHECK(r.certified_kappa.has_value() == (r.conditions.any_holds || r.sweep_sharp));
  }
  CHECK(std::is_sorted(r512.begin(), r512.end(), [](const auto& a, const auto& b) { return a.params < b.params; }));
  CHECK(kind_of([] { scan_parameters(5000); }) == ErrorKind::InvalidParams);
}

TEST_CASE("scan matches a brute-force feasibility oracle") {
  // Adjacency eigenvalues r, s solve x^2 - (a-b)x - (d-b) = 0 and the
  // multiplicities follow from trace conditions.
  std::set<SrgParams> oracle;
  for (std::int64_t n = 3; n <= 120; ++n)
    for (std::int64_t d = 1; d < n; ++d)
      for (std::int64_t a = 0; a < d; ++a)
        for (std::int64_t b = 1; b <= d; ++b) {
          if (d * (d - a - 1) != (n - d - 1) * b) continue;
          const double disc = double((a - b) * (a - b) + 4 * (d - b));
          const double r = ((a - b) + std::sqrt(disc)) / 2, s = ((a - b) - std::sqrt(disc)) / 2;
          const double f = (-(n - 1) * s - d) / (r - s), g = ((n - 1) * r + d) / (r - s);
          const bool conference = 2 * d + (n - 1) * (a - b) == 0 && (n - 1) % 2 == 0;
          const bool integral = std::abs(f - std::round(f)) < 1e-6 && std::abs(g - std::round(g)) < 1e-6 &&
                                std::round(f) > 0 && std::round(g) > 0;
          if (conference || integral) oracle.insert({n, d, a, b});
        }
  std::set<SrgParams> scanned;
  for (const auto& r : scan_parameters(120)) scanned.insert(r.params);
  CHECK(scanned == oracle);
}

TEST_CASE("scan CSV round trip") {
  const auto rows = scan_parameters(64);
  std::string text = "# config {}\n" + scan_csv_header() + "\n";
  for (const auto& r : rows) text += to_csv_line(r) + "\n";
  const auto back = read_scan_csv(text);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(to_csv_line(back[i]) == to_csv_line(rows[i]));
  CHECK(scan_csv_header() == "n,d,alpha,beta,cond1,cond2,cond3,cond4,cond5,hlx,ll,sweep,conference,kappa_num,kappa_den");
  CHECK(kind_of([] { read_scan_csv("n,d\n1,2\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("scan is identical across thread counts") {
  const auto a = scan_parameters(200, 1), b = scan_parameters(200, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_csv_line(a[i]) == to_csv_line(b[i]));
}
