#include "curv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curv/certify.hpp"
#include "curv/error.hpp"
#include "curv/generators.hpp"
#include "curv/graph_io.hpp"
#include "curv/matching.hpp"
#include "curv/numtheory.hpp"
#include "curv/parallel.hpp"
#include "curv/spectral.hpp"
#include "curv/transport.hpp"

namespace curv {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string graph;
  std::string out;
  std::string format;
  std::string name;
  std::string edge;
  std::string params;
  std::string mode = "exhaustive";
  std::int64_t q = 0, k = 0, n = 0, m = 0;
  std::int64_t max_n = 512;
  std::int64_t gamma_max = 12;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  unsigned threads = default_threads();
  bool witness = false;
  bool sweep_transcript = false;
};

json rational_json(const Rational& r) { return {{"num", r.numerator_string()}, {"den", r.denominator_string()}}; }

json surd_json(const QuadraticSurd& s) {
  return {{"u", s.u}, {"v", s.v}, {"w", s.w}, {"D", s.radicand}, {"text", s.to_string()}, {"value", s.to_double()}};
}

json params_json(const SrgParams& p) { return {{"n", p.n}, {"d", p.d}, {"alpha", p.alpha}, {"beta", p.beta}}; }

Edge parse_edge(const std::string& text) {
  std::istringstream is(text);
  long long u = -1, v = -1;
  char comma = 0;
  std::string rest;
  if (!(is >> u >> comma >> v) || comma != ',' || (is >> rest) || u < 0 || v < 0) {
    throw Error(ErrorKind::ParseError, "expected --edge u,v but got '" + text + "'");
  }
  return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

// Writes to --out when given, otherwise to the command's output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::ParseError, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  void json_document(const json& doc) { *stream_ << doc.dump(2) << '\n'; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

json base_config(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["threads"] = c.threads;
  return j;
}

json curvature_report_json(const CurvatureReport& r) {
  json j;
  j["x"] = r.edge.first;
  j["y"] = r.edge.second;
  j["kappa"] = rational_json(r.kappa);
  j["delta"] = r.delta_size;
  j["upper_bound"] = rational_json(r.upper_bound);
  j["sharp"] = r.sharp;
  if (r.witness) {
    json pairs = json::array();
    for (const auto& [a, b] : *r.witness) pairs.push_back({a, b});
    j["witness"] = pairs;
  }
  return j;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
  std::vector<std::int64_t> args;
  auto need = [&](std::int64_t value, const char* flag) {
    if (value <= 0) throw Error(ErrorKind::InvalidParams, c.name + " needs " + flag);
    args.push_back(value);
  };
  if (c.name == "rook" || c.name == "cocktail_party") {
    need(c.k, "--k");
  } else if (c.name == "johnson") {
    need(c.n, "--n");
    need(c.k, "--k");
  } else if (c.name == "cycle" || c.name == "complete") {
    need(c.n, "--n");
  } else if (c.name == "hypercube") {
    need(c.m, "--m");
  } else if (c.name == "paley") {
    need(c.q, "--q");
  }
  const Graph g = named_graph(c.name, args);
  const auto format = parse_graph_format(c.format.empty() ? "graph6" : c.format);
  write_graph_file(c.out, g, format);
  json config = base_config(c);
  config["name"] = c.name;
  if (c.q) config["q"] = c.q;
  if (c.k) config["k"] = c.k;
  if (c.n) config["n"] = c.n;
  if (c.m) config["m"] = c.m;
  config["out"] = c.out;
  config["format"] = format == GraphFormat::Json ? "json" : "graph6";
  out << json{{"config", config}, {"vertices", g.order()}, {"edges", g.edge_count()}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_curvature(const RunConfig& c, std::ostream& out) {
  const Graph g = read_graph_file(c.graph);
  const std::string format = c.format.empty() ? "json" : c.format;
  if (format != "json" && format != "csv") throw Error(ErrorKind::ParseError, "--format must be json or csv");
  std::vector<CurvatureReport> reports;
  std::optional<Rational> min_kappa;
  if (!c.edge.empty()) {
    const Edge e = parse_edge(c.edge);
    reports.push_back(lly_curvature(g, e.first, e.second, {c.witness}));
  } else {
    auto spectrum = curvature_spectrum(g, c.threads, {c.witness});
    reports = std::move(spectrum.reports);
    min_kappa = spectrum.min_kappa;
  }
  json config = base_config(c);
  config["graph"] = c.graph;
  if (!c.edge.empty()) config["edge"] = c.edge;
  config["format"] = format;
  config["witness"] = c.witness;
  Sink sink(c.out, out);
  if (format == "csv") {
    auto& os = sink.stream();
    os << "# config " << config.dump() << '\n';
    os << "x,y,kappa_num,kappa_den,delta,upper_num,upper_den,sharp\n";
    for (const auto& r : reports) {
      os << r.edge.first << ',' << r.edge.second << ',' << r.kappa.numerator_string() << ','
         << r.kappa.denominator_string() << ',' << r.delta_size << ',' << r.upper_bound.numerator_string() << ','
         << r.upper_bound.denominator_string() << ',' << (r.sharp ? 1 : 0) << '\n';
    }
    return kExitOk;
  }
  json doc;
  doc["config"] = config;
  doc["n"] = g.order();
  json edges = json::array();
  for (const auto& r : reports) edges.push_back(curvature_report_json(r));
  doc["edges"] = edges;
  if (min_kappa) doc["min_kappa"] = rational_json(*min_kappa);
  sink.json_document(doc);
  return kExitOk;
}

int cmd_match(const RunConfig& c, std::ostream& out) {
  const Graph g = read_graph_file(c.graph);
  const Edge e = parse_edge(c.edge);
  const BipartiteInstance b = local_bipartite(g, e.first, e.second);
  const MatchingResult r = max_matching(b);
  json doc;
  json config = base_config(c);
  config["graph"] = c.graph;
  config["edge"] = c.edge;
  config["witness"] = c.witness;
  doc["config"] = config;
  doc["left"] = b.left;
  doc["right"] = b.right;
  doc["matched"] = r.pairs.size();
  doc["perfect"] = r.perfect;
  if (c.witness) {
    json pairs = json::array();
    for (const auto& [l, rr] : r.pairs) pairs.push_back({b.left[l], b.right[rr]});
    doc["pairs"] = pairs;
  }
  if (r.violator) {
    std::vector<VertexId> s, hood;
    for (auto i : *r.violator) s.push_back(b.left[i]);
    for (auto i : left_neighborhood(b, *r.violator)) hood.push_back(b.right[i]);
    doc["violator"] = s;
    doc["violator_neighborhood"] = hood;
  }
  Sink(c.out, out).json_document(doc);
  return kExitOk;
}

json quadratic_json(const ObstructionQuadratic& q) {
  return {{"b", q.b},
          {"a2", rational_json(q.a2)},
          {"a1", rational_json(q.a1)},
          {"a0", rational_json(q.a0)},
          {"discriminant", rational_json(q.discriminant)},
          {"feasible", q.feasible}};
}

json conditions_json(const ConditionReport& r) {
  return {{"cond1", r.cond1}, {"cond2", r.cond2}, {"cond3", r.cond3}, {"cond4", r.cond4},
          {"cond5", r.cond5}, {"hlx", r.hlx},     {"ll", r.ll},       {"any", r.any_holds}};
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  const SrgParams p = SrgParams::parse(c.params);
  const Certificate cert = certify_curvature(p);
  json doc;
  json config = base_config(c);
  config["params"] = c.params;
  config["sweep_transcript"] = c.sweep_transcript;
  doc["config"] = config;
  doc["params"] = params_json(p);
  doc["conditions"] = conditions_json(cert.conditions);
  json outcome;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SharpByCondition>) {
          outcome = {{"kind", "sharp-by-condition"}, {"condition", to_string(o.which)}};
        } else if constexpr (std::is_same_v<T, SharpByDiscriminantSweep>) {
          outcome = {{"kind", "sharp-by-discriminant-sweep"}, {"b1_rule", to_string(o.singleton_rule)}};
        } else {
          outcome = {{"kind", "inconclusive"}, {"reason", o.reason}};
          if (o.failing_b) outcome["failing_b"] = *o.failing_b;
        }
      },
      cert.outcome);
  doc["outcome"] = outcome;
  doc["kappa"] = cert.certified_kappa ? rational_json(*cert.certified_kappa) : json(nullptr);
  if (c.sweep_transcript) {
    const auto sweep = discriminant_sweep(p);
    json transcript = json::array();
    if (const auto* s = std::get_if<SharpByDiscriminantSweep>(&sweep)) {
      for (const auto& q : s->transcript) transcript.push_back(quadratic_json(q));
    } else {
      // Inconclusive sweeps still list the quadratics up to the failing b.
      const auto& inc = std::get<Inconclusive>(sweep);
      if (inc.failing_b && *inc.failing_b >= 2) {
        for (std::int64_t b = 2; b <= *inc.failing_b; ++b) transcript.push_back(quadratic_json(obstruction_quadratic(p, b)));
      }
    }
    doc["transcript"] = transcript;
  }
  Sink(c.out, out).json_document(doc);
  return kExitOk;
}

int cmd_scan(const RunConfig& c, std::ostream& out) {
  const auto rows = scan_parameters(c.max_n, c.threads);
  json config = base_config(c);
  config["max_n"] = c.max_n;
  if (!c.out.empty()) config["out"] = c.out;
  Sink sink(c.out, out);
  auto& os = sink.stream();
  os << "# config " << config.dump() << '\n' << scan_csv_header() << '\n';
  for (const auto& r : rows) os << to_csv_line(r) << '\n';
  return kExitOk;
}

json spectrum_json(const SpectrumReport& s) {
  return {{"params", params_json(s.params)},
          {"lambda1", 0},
          {"lambda2", surd_json(s.lambda2)},
          {"lambda3", surd_json(s.lambda3)},
          {"m1", s.m1},
          {"m2", s.m2},
          {"m3", s.m3}};
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  json config = base_config(c);
  json doc;
  if (!c.params.empty()) {
    config["params"] = c.params;
    doc["config"] = config;
    doc["spectrum"] = spectrum_json(srg_spectrum(SrgParams::parse(c.params)));
  } else {
    config["graph"] = c.graph;
    doc["config"] = config;
    const Graph g = read_graph_file(c.graph);
    const auto cls = classify_regularity(g);
    if (!cls.is_strongly_regular()) {
      throw Error(ErrorKind::NotSrgParameters, "graph is " + cls.to_string() + ", not strongly regular");
    }
    doc["spectrum"] = spectrum_json(srg_spectrum(*cls.params));
    doc["identity_verified"] = verify_srg_identity(g, *cls.params, c.threads);
    doc["numerical_lambda2"] = numerical_lambda2(g);
  }
  Sink(c.out, out).json_document(doc);
  return kExitOk;
}

int cmd_sharpness(const RunConfig& c, std::ostream& out) {
  const Graph g = read_graph_file(c.graph);
  const auto r = lichnerowicz_report(g, c.threads);
  json config = base_config(c);
  config["graph"] = c.graph;
  json doc;
  doc["config"] = config;
  doc["min_kappa"] = rational_json(r.min_kappa);
  doc["lambda2"] = r.lambda2;
  doc["lambda2_exact"] = r.lambda2_exact ? surd_json(*r.lambda2_exact) : json(nullptr);
  doc["bound_kappa"] = r.bound_kappa ? rational_json(*r.bound_kappa) : json(nullptr);
  doc["sharp"] = r.sharp;
  Sink(c.out, out).json_document(doc);
  return kExitOk;
}

int cmd_corollary(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.mode != "exhaustive" && c.mode != "sampled") {
    throw Error(ErrorKind::ParseError, "--mode must be exhaustive or sampled");
  }
  const auto mode = c.mode == "exhaustive" ? CorollaryMode::Exhaustive : CorollaryMode::Sampled;
  const auto r = verify_corollary(static_cast<std::uint64_t>(std::max<std::int64_t>(c.q, 0)), mode, c.seed, c.trials,
                                  c.threads);
  json config = base_config(c);
  config["q"] = c.q;
  config["mode"] = c.mode;
  if (mode == CorollaryMode::Sampled) {
    config["seed"] = c.seed;
    config["trials"] = c.trials;
  }
  json doc;
  doc["config"] = config;
  doc["q"] = r.q;
  doc["pair"] = {r.pair.first, r.pair.second};
  doc["min_size"] = r.min_size;
  doc["subsets_tested"] = r.subsets_tested;
  doc["failures"] = r.failures;
  Sink(c.out, out).json_document(doc);
  if (!r.failures.empty()) {
    err << json{{"failure", "corollary"}, {"q", r.q}, {"count", r.failures.size()}}.dump() << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_verify_conjecture(const RunConfig& c, std::ostream& out, std::ostream& err) {
  json results = json::array();
  json failures = json::array();
  for (std::int64_t gamma = 2; gamma <= c.gamma_max; ++gamma) {
    const auto q = static_cast<std::uint64_t>(4 * gamma + 1);
    try {
      prime_power_decomposition(q);
    } catch (const Error&) {
      continue;
    }
    const Graph g = paley_graph(q);
    const auto spectrum = curvature_spectrum(g, c.threads);
    const Rational expected = Rational(1, 2) + Rational(1, 2 * gamma);
    std::size_t bad = 0;
    for (const auto& r : spectrum.reports) {
      if (r.kappa != expected) {
        ++bad;
        failures.push_back({{"gamma", gamma}, {"q", q}, {"x", r.edge.first}, {"y", r.edge.second},
                            {"kappa", rational_json(r.kappa)}, {"expected", rational_json(expected)}});
      }
    }
    results.push_back({{"gamma", gamma},
                       {"q", q},
                       {"edges", spectrum.reports.size()},
                       {"kappa", rational_json(expected)},
                       {"ok", bad == 0}});
  }
  json config = base_config(c);
  config["gamma_max"] = c.gamma_max;
  json doc;
  doc["config"] = config;
  doc["results"] = results;
  doc["failures"] = failures;
  doc["all_ok"] = failures.empty();
  Sink(c.out, out).json_document(doc);
  if (!failures.empty()) {
    err << json{{"failure", "verify-conjecture"}, {"records", failures}}.dump() << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact curvature, matching and spectral certificates for regular graphs", "curvtool"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool with_out = true) {
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    if (with_out) sub->add_option("--out", cfg.out, "Output file (default stdout)");
  };

  auto* gen = app.add_subcommand("gen", "Write a named graph to a file");
  gen->add_option("--name", cfg.name, "Family name")->required();
  gen->add_option("--q", cfg.q, "Field order (paley)");
  gen->add_option("--k", cfg.k, "Family parameter k");
  gen->add_option("--n", cfg.n, "Family parameter n");
  gen->add_option("--m", cfg.m, "Hypercube dimension");
  gen->add_option("--out", cfg.out, "Output graph file")->required();
  gen->add_option("--format", cfg.format, "graph6 or json");
  common(gen, false);

  auto* curvature = app.add_subcommand("curvature", "Lin-Lu-Yau curvature of every edge, or one edge");
  curvature->add_option("--graph", cfg.graph, "Graph file (graph6 or json)")->required();
  curvature->add_option("--edge", cfg.edge, "Single edge u,v");
  curvature->add_option("--format", cfg.format, "json or csv");
  curvature->add_flag("--witness", cfg.witness, "Include the optimal bijection");
  common(curvature);

  auto* match = app.add_subcommand("match", "Matching between N_x and N_y of an edge");
  match->add_option("--graph", cfg.graph, "Graph file")->required();
  match->add_option("--edge", cfg.edge, "Edge u,v")->required();
  match->add_flag("--witness", cfg.witness, "Print the matched pairs");
  common(match);

  auto* certify = app.add_subcommand("certify", "Parameter-only sharpness certificate");
  certify->add_option("--params", cfg.params, "n,d,alpha,beta")->required();
  certify->add_flag("--sweep-transcript", cfg.sweep_transcript, "Print the discriminant sweep");
  common(certify);

  auto* scan = app.add_subcommand("scan", "Scan feasible SRG parameters as CSV");
  scan->add_option("--max-n", cfg.max_n, "Largest order")->required();
  common(scan);

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form normalized Laplacian spectrum");
  auto* sp_params = spectrum->add_option("--params", cfg.params, "n,d,alpha,beta");
  auto* sp_graph = spectrum->add_option("--graph", cfg.graph, "Graph file");
  sp_params->excludes(sp_graph);
  sp_graph->excludes(sp_params);
  common(spectrum);

  auto* sharpness = app.add_subcommand("sharpness", "Compare min curvature with lambda2");
  sharpness->add_option("--graph", cfg.graph, "Graph file")->required();
  common(sharpness);

  auto* corollary = app.add_subcommand("corollary", "Check the quadratic-residue pattern statement");
  corollary->add_option("--q", cfg.q, "Field order")->required();
  corollary->add_option("--mode", cfg.mode, "exhaustive or sampled");
  corollary->add_option("--trials", cfg.trials, "Samples in sampled mode");
  corollary->add_option("--seed", cfg.seed, "Seed in sampled mode");
  common(corollary);

  auto* conjecture = app.add_subcommand("verify-conjecture", "Paley curvature 1/2 + 1/(2 gamma)");
  conjecture->add_option("--gamma-max", cfg.gamma_max, "Largest gamma")->required();
  common(conjecture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << '\n';
    return kExitConfig;
  }

  try {
    if (*spectrum && cfg.params.empty() && cfg.graph.empty()) {
      throw Error(ErrorKind::ParseError, "spectrum needs --params or --graph");
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (*gen) return cmd_gen(cfg, out);
    if (*curvature) return cmd_curvature(cfg, out);
    if (*match) return cmd_match(cfg, out);
    if (*certify) return cmd_certify(cfg, out);
    if (*scan) return cmd_scan(cfg, out);
    if (*spectrum) return cmd_spectrum(cfg, out);
    if (*sharpness) return cmd_sharpness(cfg, out);
    if (*corollary) return cmd_corollary(cfg, out, err);
    if (*conjecture) return cmd_verify_conjecture(cfg, out, err);
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace curv
