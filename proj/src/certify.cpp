#include "curv/certify.hpp"

#include <algorithm>
#include <sstream>

#include "curv/error.hpp"
#include "curv/parallel.hpp"
#include "curv/spectral.hpp"

namespace curv {

namespace {

using i64 = std::int64_t;

i64 choose2(i64 b) { return b * (b - 1) / 2; }

}  // namespace

ConditionReport evaluate_conditions(const SrgParams& params) {
  params.validate();
  const i64 n = params.n, d = params.d, a = params.alpha, b = params.beta;
  ConditionReport r;
  r.params = params;
  const bool small_n = n < 3 * d - 2 * a;

  const i64 t = 2 * d - 2 * a - 3;
  r.cond1 = b == a + 1 && small_n && t > 0 && t * t > 24 * a + 1;
  r.cond2 = b == a + 2 && small_n && t >= 0 && t * t >= 40 * a + 41;

  const i64 radicand = 4 * a * a - 3 * b * b + 4 * a + 24 * b - 20;
  const i64 gap = 2 * d - 3 * b;
  r.cond3 = b > a + 2 && small_n && radicand >= 0 && gap * gap >= radicand;

  r.cond4 = b >= 7 && 3 * (b - 7) * (b - 7) >= 4 * a * a && small_n;

  const i64 den = 6 * b - d - 1;
  const i64 num = 2 * d * d - 4 * b * d + 7 * b * b + d - 14 * b + 7;
  const bool fraction_ok = den > 0 ? a * den <= num : (den < 0 ? a * den >= num : false);
  r.cond5 = b <= a && 2 * n < 5 * d - 3 * a && a > 0 && a * d >= a * (2 * a + 3) - (b - 1) * (b - 1) && fraction_ok;

  r.hlx = d <= 2 * b - a - 1;
  r.ll = a == 0 && b >= 2;
  r.any_holds = r.cond1 || r.cond2 || r.cond3 || r.cond4 || r.cond5 || r.hlx || r.ll;
  return r;
}

ObstructionQuadratic obstruction_quadratic(const SrgParams& params, std::int64_t b, PxyBound bound) {
  params.validate();
  if (b < 2) throw Error(ErrorKind::UseBOneCheck, "b = " + std::to_string(b) + " is handled by the b = 1 rules");
  const i64 n = params.n, d = params.d, a = params.alpha, beta = params.beta;
  const i64 m = d - a - 1;
  const i64 slots = bound == PxyBound::Exact ? n - 2 * d + a : m;
  if (a < 1 || m < 1 || slots < 1) {
    throw Error(ErrorKind::DegenerateParameters, "obstruction quadratic needs alpha >= 1, d-alpha-1 >= 1, |P_xy| >= 1");
  }

  struct Term {
    i64 c, s, den;
  };
  const Term terms[] = {
      {beta - 1, -1, a},       // Delta_xy
      {m, -1, slots},          // P_xy
      {0, +1, b - 1},          // N_y
      {a - beta + 1, +1, m},   // N_x
  };

  ObstructionQuadratic q;
  q.b = b;
  const Rational half(1, 2);
  // Each term contributes (1/2)[(cb + sX)^2/den - (cb + sX)].
  for (const auto& [c, s, den] : terms) {
    const Rational inv(1, den);
    q.a2 += half * inv;
    q.a1 += half * (Rational(2 * c * b * s) * inv - Rational(s));
    q.a0 += half * (Rational(c * b) * Rational(c * b) * inv - Rational(c * b));
  }
  q.a0 += Rational(choose2(b)) - Rational(choose2(b)) * Rational(std::max(a, beta));
  q.discriminant = q.a1 * q.a1 - Rational(4) * q.a2 * q.a0;
  q.feasible = q.discriminant.sign() >= 0;
  return q;
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::Cond1: return "cond1";
    case Condition::Cond2: return "cond2";
    case Condition::Cond3: return "cond3";
    case Condition::Cond4: return "cond4";
    case Condition::Cond5: return "cond5";
    case Condition::Hlx: return "hlx";
    case Condition::Ll: return "ll";
  }
  return "?";
}

std::string to_string(SingletonRule r) {
  switch (r) {
    case SingletonRule::BetaExceedsAlphaPlusOne: return "beta-1>alpha";
    case SingletonRule::PxyTooSmall: return "|P_xy|<d-alpha-1";
    case SingletonRule::ParityContradiction: return "parity";
    case SingletonRule::EmptyPxy: return "P_xy empty";
    case SingletonRule::EmptyNx: return "N_x empty";
  }
  return "?";
}

std::variant<SharpByDiscriminantSweep, Inconclusive> discriminant_sweep(const SrgParams& params) {
  params.validate();
  const i64 n = params.n, d = params.d, a = params.alpha, beta = params.beta;
  const i64 m = d - a - 1;
  const i64 p = n - 2 * d + a;

  if (m == 0) return SharpByDiscriminantSweep{SingletonRule::EmptyNx, {}};
  if (p < 0) return Inconclusive{"negative |P_xy|: parameters not realizable", std::nullopt};
  if (p == 0) return SharpByDiscriminantSweep{SingletonRule::EmptyPxy, {}};
  if (a == 0) return Inconclusive{"alpha = 0 leaves the Delta_xy bound undefined", std::nullopt};

  SingletonRule rule;
  if (beta - 1 > a) {
    rule = SingletonRule::BetaExceedsAlphaPlusOne;
  } else if (p < m) {
    rule = SingletonRule::PxyTooSmall;
  } else if (beta == a + 1 && p == m && m >= 2) {
    rule = SingletonRule::ParityContradiction;
  } else {
    return Inconclusive{"no b = 1 rule applies", 1};
  }

  SharpByDiscriminantSweep sweep{rule, {}};
  for (i64 b = 2; b <= (d - a) / 2; ++b) {
    auto q = obstruction_quadratic(params, b);
    const bool feasible = q.feasible;
    sweep.transcript.push_back(std::move(q));
    if (feasible) return Inconclusive{"obstruction quadratic has a real root", b};
  }
  return sweep;
}

Certificate certify_curvature(const SrgParams& params) {
  Certificate cert;
  cert.params = params;
  cert.conditions = evaluate_conditions(params);
  const auto& c = cert.conditions;
  const std::pair<bool, Condition> flags[] = {
      {c.cond1, Condition::Cond1}, {c.cond2, Condition::Cond2}, {c.cond3, Condition::Cond3},
      {c.cond4, Condition::Cond4}, {c.cond5, Condition::Cond5}, {c.hlx, Condition::Hlx},
      {c.ll, Condition::Ll},
  };
  const auto hit = std::find_if(std::begin(flags), std::end(flags), [](const auto& f) { return f.first; });
  if (hit != std::end(flags)) {
    cert.outcome = SharpByCondition{hit->second};
  } else {
    std::visit([&](auto&& v) { cert.outcome = std::move(v); }, discriminant_sweep(params));
  }
  if (!std::holds_alternative<Inconclusive>(cert.outcome)) {
    cert.certified_kappa = Rational(2 + params.alpha, params.d);
  }
  return cert;
}

std::vector<ScanRow> scan_parameters(std::int64_t max_n, unsigned threads) {
  if (max_n > kMaxScanOrder) throw Error(ErrorKind::InvalidParams, "scan is capped at n = 4096");
  std::vector<SrgParams> candidates;
  for (i64 d = 1; d + 2 <= max_n; ++d) {
    for (i64 a = 0; a + 1 < d; ++a) {
      const i64 top = d * (d - a - 1);
      // n - d - 1 = top / beta <= max_n - d - 1
      const i64 beta_min = std::max<i64>(1, (top + (max_n - d - 1) - 1) / (max_n - d - 1));
      for (i64 beta = beta_min; beta <= d; ++beta) {
        if (top % beta != 0) continue;
        const i64 n = d + 1 + top / beta;
        if (n < 3 || n > max_n) continue;
        candidates.push_back({n, d, a, beta});
      }
    }
  }

  std::vector<std::optional<ScanRow>> slots(candidates.size());
  parallel_for(candidates.size(), threads, [&](std::size_t i) {
    const SrgParams& p = candidates[i];
    try {
      srg_spectrum(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InfeasibleParameters) return;
      throw;
    }
    ScanRow row;
    row.params = p;
    row.conditions = evaluate_conditions(p);
    row.conference = p.is_conference();
    row.sweep_sharp = std::holds_alternative<SharpByDiscriminantSweep>(discriminant_sweep(p));
    if (row.conditions.any_holds || row.sweep_sharp) row.certified_kappa = Rational(2 + p.alpha, p.d);
    slots[i] = std::move(row);
  });

  std::vector<ScanRow> rows;
  for (auto& s : slots) {
    if (s) rows.push_back(std::move(*s));
  }
  std::sort(rows.begin(), rows.end(), [](const ScanRow& x, const ScanRow& y) { return x.params < y.params; });
  return rows;
}

std::string scan_csv_header() { return "n,d,alpha,beta,cond1,cond2,cond3,cond4,cond5,hlx,ll,sweep,conference,kappa_num,kappa_den"; }

std::string to_csv_line(const ScanRow& row) {
  const auto& p = row.params;
  const auto& c = row.conditions;
  std::ostringstream os;
  auto flag = [](bool b) { return b ? "1" : "0"; };
  os << p.n << ',' << p.d << ',' << p.alpha << ',' << p.beta << ',' << flag(c.cond1) << ',' << flag(c.cond2) << ','
     << flag(c.cond3) << ',' << flag(c.cond4) << ',' << flag(c.cond5) << ',' << flag(c.hlx) << ',' << flag(c.ll)
     << ',' << flag(row.sweep_sharp) << ',' << flag(row.conference) << ',';
  if (row.certified_kappa) os << row.certified_kappa->numerator_string() << ',' << row.certified_kappa->denominator_string();
  else os << ',';
  return os.str();
}

std::vector<ScanRow> read_scan_csv(const std::string& text) {
  std::vector<ScanRow> rows;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != scan_csv_header()) throw Error(ErrorKind::ParseError, "unexpected scan CSV header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    if (f.size() != 15) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 15 fields");
    auto num = [&](const std::string& s) {
      try {
        std::size_t used = 0;
        const i64 v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + s + "'");
      }
    };
    auto flag = [&](const std::string& s) {
      if (s != "0" && s != "1") throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad flag");
      return s == "1";
    };
    ScanRow row;
    row.params = {num(f[0]), num(f[1]), num(f[2]), num(f[3])};
    auto& c = row.conditions;
    c.params = row.params;
    c.cond1 = flag(f[4]);
    c.cond2 = flag(f[5]);
    c.cond3 = flag(f[6]);
    c.cond4 = flag(f[7]);
    c.cond5 = flag(f[8]);
    c.hlx = flag(f[9]);
    c.ll = flag(f[10]);
    c.any_holds = c.cond1 || c.cond2 || c.cond3 || c.cond4 || c.cond5 || c.hlx || c.ll;
    row.sweep_sharp = flag(f[11]);
    row.conference = flag(f[12]);
    if (f[13].empty() != f[14].empty()) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": half a kappa");
    if (!f[13].empty()) row.certified_kappa = Rational(num(f[13]), num(f[14]));
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw Error(ErrorKind::ParseError, "scan CSV has no header");
  return rows;
}

}  // namespace curv
