#include <doctest.h>

#include <set>

#include "curv/error.hpp"
#include "curv/field.hpp"
#include "curv/generators.hpp"

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

// Triangles among the neighbors of v.
int local_triangles(const Graph& g, VertexId v) {
  const auto nb = g.neighbors(v);
  int t = 0;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      for (std::size_t k = j + 1; k < nb.size(); ++k)
        t += g.adjacent(nb[i], nb[j]) && g.adjacent(nb[j], nb[k]) && g.adjacent(nb[i], nb[k]);
  return t;
}

}  // namespace

TEST_CASE("make_field moduli") {
  const auto f13 = make_field(13, 1);
  CHECK(f13.order() == 13);
  CHECK(f13.modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(f13.index_of(f13.mul(f13.element(5), f13.element(7))) == 35 % 13);

  CHECK(make_field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});  // t^2 + 1
  CHECK(make_field(5, 2).modulus() == std::vector<std::uint32_t>{2, 0, 1});  // t^2 + 2
  CHECK(make_field(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});

  CHECK(kind_of([] { make_field(9, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_field(2, 40); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { prime_power_decomposition(12); }) == ErrorKind::NotPrimePower);
  CHECK(prime_power_decomposition(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
}

TEST_CASE("moduli are irreducible: no roots and no factor of lower degree") {
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
    const auto f = make_field(p, m);
    // A field has no zero divisors: every non-zero element has an inverse.
    for (std::uint64_t a = 1; a < f.order(); ++a) {
      const auto e = f.element(a);
      CHECK(f.index_of(f.mul(e, f.inverse(e))) == f.index_of(f.one()));
    }
  }
}

TEST_CASE("is_nonzero_square examples and brute-force squaring") {
  const auto f13 = make_field(13, 1);
  CHECK(is_nonzero_square(f13, f13.element(4)));
  CHECK_FALSE(is_nonzero_square(f13, f13.element(2)));
  CHECK_FALSE(is_nonzero_square(f13, f13.zero()));

  for (std::uint64_t q : {5, 7, 9, 11, 13, 16, 17, 25, 27, 29, 37, 41, 49}) {
    const auto f = make_field_of_order(q);
    std::set<std::uint64_t> squares;
    for (std::uint64_t b = 1; b < q; ++b) squares.insert(f.index_of(f.mul(f.element(b), f.element(b))));
    std::size_t marked = 0;
    for (std::uint64_t a = 0; a < q; ++a) {
      const bool s = is_nonzero_square(f, f.element(a));
      CHECK(s == (squares.count(a) == 1));
      marked += s;
    }
    CHECK(marked == (q % 2 == 1 ? (q - 1) / 2 : q - 1));
  }

  // GF(9): t is a square exactly when some b^2 equals it.
  const auto f9 = make_field(3, 2);
  const FieldElement t{{0, 1}};
  bool found = false;
  for (std::uint64_t b = 0; b < 9; ++b) found |= f9.mul(f9.element(b), f9.element(b)) == t;
  CHECK(is_nonzero_square(f9, t) == found);
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49}) {
    const auto f = make_field_of_order(q);
    std::vector<FieldElement> el;
    for (std::uint64_t i = 0; i < q; ++i) {
      el.push_back(f.element(i));
      CHECK(f.index_of(el.back()) == i);
    }
    bool ok = true;
    for (std::uint64_t a = 0; a < q && ok; ++a) {
      if (a != 0) ok &= f.mul(el[a], f.inverse(el[a])) == f.one();
      ok &= f.add(el[a], f.neg(el[a])) == f.zero();
      for (std::uint64_t b = 0; b < q && ok; ++b) {
        ok &= f.mul(el[a], el[b]) == f.mul(el[b], el[a]);
        ok &= f.add_index(a, b) == f.index_of(f.add(el[a], el[b]));
        ok &= f.sub_index(a, b) == f.index_of(f.sub(el[a], el[b]));
        for (std::uint64_t c = 0; c < q && ok; ++c) {
          ok &= f.mul(f.mul(el[a], el[b]), el[c]) == f.mul(el[a], f.mul(el[b], el[c]));
          ok &= f.add(f.add(el[a], el[b]), el[c]) == f.add(el[a], f.add(el[b], el[c]));
          ok &= f.mul(el[a], f.add(el[b], el[c])) == f.add(f.mul(el[a], el[b]), f.mul(el[a], el[c]));
        }
      }
    }
    CHECK_MESSAGE(ok, "q = " << q);
  }
  CHECK_THROWS_AS(make_field(5, 1).inverse(make_field(5, 1).zero()), Error);
}

TEST_CASE("paley graphs") {
  CHECK(paley_graph(5) == cycle_graph(5));
  for (std::uint64_t q : {5, 9, 13, 17, 25, 29, 37, 41, 49}) {
    const Graph g = paley_graph(q);
    CHECK(g.edge_count() == q * (q - 1) / 4);
    const auto cls = classify_regularity(g);
    REQUIRE(cls.is_strongly_regular());
    const auto n = static_cast<std::int64_t>(q);
    CHECK(*cls.params == SrgParams{n, (n - 1) / 2, (n - 5) / 4, (n - 1) / 4});
  }
  CHECK(kind_of([] { paley_graph(7); }) == ErrorKind::NotPaleyOrder);
  CHECK(kind_of([] { paley_graph(21); }) == ErrorKind::NotPrimePower);
  CHECK(kind_of([] { paley_graph(15); }) == ErrorKind::NotPrimePower);
}

TEST_CASE("named families reproduce their parameters") {
  for (const auto& entry : named_catalog()) {
    if (!entry.srg) continue;
    const auto cls = classify_regularity(entry.graph);
    REQUIRE_MESSAGE(cls.is_strongly_regular(), entry.name);
    CHECK_MESSAGE(*cls.params == *entry.srg, entry.name);
  }
  const std::int64_t four[] = {4};
  const std::int64_t five_two[] = {5, 2};
  CHECK(*classify_regularity(named_graph("rook", four)).params == SrgParams{16, 6, 2, 2});
  CHECK(*classify_regularity(named_graph("johnson", five_two)).params == SrgParams{10, 6, 3, 4});
  const std::int64_t two[] = {2};
  CHECK(*classify_regularity(named_graph("cocktail_party", two)).params == SrgParams{4, 2, 0, 2});
  CHECK(*classify_regularity(clebsch_graph()).params == SrgParams{16, 10, 6, 6});
  CHECK(*classify_regularity(petersen_graph()).params == SrgParams{10, 3, 0, 1});

  CHECK(kind_of([] { named_graph("dodecahedron", {}); }) == ErrorKind::UnknownFamily);
  CHECK(kind_of([] { named_graph("rook", {}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::InvalidParams);
}

TEST_CASE("rook(4) and shrikhande share parameters but not local structure") {
  const Graph rook = rook_graph(4), shri = shrikhande_graph();
  // Neighborhoods: two triangles versus a hexagon.
  CHECK(local_triangles(rook, 0) == 2);
  CHECK(local_triangles(shri, 0) == 0);
  CHECK(rook.edge_count() == shri.edge_count());
}

TEST_CASE("random regular graphs are simple, regular, connected and reproducible") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_regular_graph(30, 5 - seed % 2 * 2, seed);
    CHECK(g.regular_degree() == std::optional<std::size_t>(5 - seed % 2 * 2));
    CHECK(g.is_connected());
    CHECK(g == random_regular_graph(30, 5 - seed % 2 * 2, seed));
  }
  CHECK(kind_of([] { random_regular_graph(5, 3, 1); }) == ErrorKind::InvalidParams);
}
