#include "curv/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "curv/error.hpp"
#include "curv/rng.hpp"

namespace curv {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, what);
}

void check_size(std::uint64_t n) {
  if (n > kMaxGeneratedVertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceeds the generator cap of 2^16");
  }
}

template <class Adjacent>
Graph build(std::uint32_t n, Adjacent&& adjacent) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph paley_graph(std::uint64_t q) {
  const auto [p, m] = prime_power_decomposition(q);
  if (q % 4 != 1) throw Error(ErrorKind::NotPaleyOrder, std::to_string(q) + " is not 1 mod 4");
  check_size(q);
  const FiniteField f = make_field(p, m);
  std::vector<bool> square(q, false);
  for (std::uint64_t i = 1; i < q; ++i) square[i] = is_nonzero_square(f, f.element(i));
  return build(static_cast<std::uint32_t>(q), [&](VertexId u, VertexId v) { return square[f.sub_index(u, v)]; });
}

Graph rook_graph(std::uint32_t k) {
  require(k >= 2, "rook(k) needs k >= 2");
  check_size(std::uint64_t{k} * k);
  return build(k * k, [k](VertexId u, VertexId v) { return u / k == v / k || u % k == v % k; });
}

Graph shrikhande_graph() {
  return build(16, [](VertexId u, VertexId v) {
    const int di = ((static_cast<int>(u / 4) - static_cast<int>(v / 4)) % 4 + 4) % 4;
    const int dj = ((static_cast<int>(u % 4) - static_cast<int>(v % 4)) % 4 + 4) % 4;
    // connection set {±(1,0), ±(0,1), ±(1,1)}
    return (dj == 0 && (di == 1 || di == 3)) || (di == 0 && (dj == 1 || dj == 3)) ||
           (di == dj && (di == 1 || di == 3));
  });
}

Graph cocktail_party_graph(std::uint32_t k) {
  require(k >= 1, "cocktail_party(k) needs k >= 1");
  check_size(2ull * k);
  return build(2 * k, [k](VertexId u, VertexId v) { return v - u != k; });
}

Graph johnson_graph(std::uint32_t n, std::uint32_t k) {
  require(n >= 2 && k >= 1 && k < n && n <= 20, "johnson(n,k) needs 1 <= k < n <= 20");
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::uint32_t>(std::popcount(mask)) == k) subsets.push_back(mask);
  }
  check_size(subsets.size());
  // lexicographic order of the sorted element lists
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
      const int ea = std::countr_zero(a), eb = std::countr_zero(b);
      if (ea != eb) return ea < eb;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
  return build(static_cast<std::uint32_t>(subsets.size()), [&](VertexId u, VertexId v) {
    return static_cast<std::uint32_t>(std::popcount(subsets[u] & subsets[v])) == k - 1;
  });
}

Graph clebsch_graph() {
  std::vector<std::uint32_t> even;
  for (std::uint32_t w = 0; w < 32; ++w) {
    if (std::popcount(w) % 2 == 0) even.push_back(w);
  }
  return build(16, [&](VertexId u, VertexId v) { return std::popcount(even[u] ^ even[v]) == 2; });
}

Graph petersen_graph() {
  std::vector<std::uint32_t> pairs;
  for (std::uint32_t a = 0; a < 5; ++a) {
    for (std::uint32_t b = a + 1; b < 5; ++b) pairs.push_back((1u << a) | (1u << b));
  }
  return build(10, [&](VertexId u, VertexId v) { return (pairs[u] & pairs[v]) == 0; });
}

Graph cycle_graph(std::uint32_t n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  check_size(n);
  return build(n, [n](VertexId u, VertexId v) { return v - u == 1 || (u == 0 && v == n - 1); });
}

Graph complete_graph(std::uint32_t n) {
  require(n >= 1, "complete(n) needs n >= 1");
  check_size(n);
  return build(n, [](VertexId, VertexId) { return true; });
}

Graph hypercube_graph(std::uint32_t m) {
  require(m >= 1 && m <= 16, "hypercube(m) needs 1 <= m <= 16");
  return build(1u << m, [](VertexId u, VertexId v) { return std::popcount(u ^ v) == 1; });
}

Graph named_graph(std::string_view name, std::span<const std::int64_t> params) {
  auto arity = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::InvalidParams, std::string(name) + " takes " + std::to_string(count) +
                                                " parameter(s), got " + std::to_string(params.size()));
    }
    for (auto v : params) require(v >= 0 && v <= UINT32_MAX, "parameter out of range");
  };
  auto arg = [&](std::size_t i) { return static_cast<std::uint32_t>(params[i]); };
  if (name == "rook") {
    arity(1);
    return rook_graph(arg(0));
  }
  if (name == "shrikhande") {
    arity(0);
    return shrikhande_graph();
  }
  if (name == "cocktail_party") {
    arity(1);
    return cocktail_party_graph(arg(0));
  }
  if (name == "johnson") {
    arity(2);
    return johnson_graph(arg(0), arg(1));
  }
  if (name == "clebsch") {
    arity(0);
    return clebsch_graph();
  }
  if (name == "petersen") {
    arity(0);
    return petersen_graph();
  }
  if (name == "cycle") {
    arity(1);
    return cycle_graph(arg(0));
  }
  if (name == "complete") {
    arity(1);
    return complete_graph(arg(0));
  }
  if (name == "hypercube") {
    arity(1);
    return hypercube_graph(arg(0));
  }
  if (name == "paley") {
    arity(1);
    return paley_graph(static_cast<std::uint64_t>(params[0]));
  }
  throw Error(ErrorKind::UnknownFamily, "unknown graph family '" + std::string(name) + "'");
}

std::vector<CatalogEntry> named_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, Graph g, std::optional<SrgParams> srg = std::nullopt) {
    out.push_back(CatalogEntry{std::move(name), std::move(g), srg});
  };
  for (std::uint32_t n = 2; n <= 6; ++n) add("complete(" + std::to_string(n) + ")", complete_graph(n));
  add("cycle(4)", cycle_graph(4), SrgParams{4, 2, 0, 2});
  add("cycle(5)", cycle_graph(5), SrgParams{5, 2, 0, 1});
  for (std::uint32_t n = 6; n <= 8; ++n) add("cycle(" + std::to_string(n) + ")", cycle_graph(n));
  add("hypercube(3)", hypercube_graph(3));
  add("hypercube(4)", hypercube_graph(4));
  add("petersen", petersen_graph(), SrgParams{10, 3, 0, 1});
  add("rook(3)", rook_graph(3), SrgParams{9, 4, 1, 2});
  add("rook(4)", rook_graph(4), SrgParams{16, 6, 2, 2});
  add("rook(5)", rook_graph(5), SrgParams{25, 8, 3, 2});
  add("shrikhande", shrikhande_graph(), SrgParams{16, 6, 2, 2});
  for (std::int64_t k = 2; k <= 6; ++k) {
    add("cocktail_party(" + std::to_string(k) + ")", cocktail_party_graph(static_cast<std::uint32_t>(k)),
        SrgParams{2 * k, 2 * k - 2, 2 * k - 4, 2 * k - 2});
  }
  add("johnson(5,2)", johnson_graph(5, 2), SrgParams{10, 6, 3, 4});
  add("johnson(6,2)", johnson_graph(6, 2), SrgParams{15, 8, 4, 4});
  add("johnson(7,2)", johnson_graph(7, 2), SrgParams{21, 10, 5, 4});
  add("clebsch", clebsch_graph(), SrgParams{16, 10, 6, 6});
  for (std::int64_t q : {5, 9, 13, 17}) {
    add("paley(" + std::to_string(q) + ")", paley_graph(static_cast<std::uint64_t>(q)),
        SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4});
  }
  return out;
}

Graph random_regular_graph(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  require(d < n && (std::uint64_t{n} * d) % 2 == 0, "random_regular_graph needs d < n and n*d even");
  SplitMix64 rng(seed);
  for (;;) {
    std::vector<VertexId> slots;
    for (VertexId v = 0; v < n; ++v) slots.insert(slots.end(), d, v);
    std::set<Edge> edges;
    bool stuck = false;
    while (!slots.empty() && !stuck) {
      bool placed = false;
      for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
        const std::size_t i = rng.below(slots.size());
        std::size_t j = rng.below(slots.size() - 1);
        if (j >= i) ++j;
        VertexId a = slots[i], b = slots[j];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (edges.count({a, b})) continue;
        edges.insert({a, b});
        for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
          slots[k] = slots.back();
          slots.pop_back();
        }
        placed = true;
      }
      stuck = !placed;
    }
    if (stuck) continue;
    const std::vector<Edge> list(edges.begin(), edges.end());
    Graph g = Graph::from_edges(n, list);
    if (g.is_connected()) return g;
  }
}

}  // namespace curv
