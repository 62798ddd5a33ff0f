#include <doctest.h>

#include <algorithm>

#include "curv/error.hpp"
#include "curv/generators.hpp"
#include "curv/matching.hpp"
#include "curv/numtheory.hpp"
#include "curv/rng.hpp"

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

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::uint64_t> random_subset(SplitMix64& rng, std::uint64_t q, std::uint64_t x, std::uint64_t y,
                                         std::uint64_t size) {
  std::vector<std::uint64_t> pool;
  for (std::uint64_t v = 0; v < q; ++v)
    if (v != x && v != y) pool.push_back(v);
  for (std::uint64_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

TEST_CASE("find_pattern_witness examples") {
  const ResidueTable t13(make_field_of_order(13));
  std::vector<std::uint64_t> s;
  for (std::uint64_t v = 0; v < 13; ++v)
    if (v != 0 && v != 1 && v != 6 && v != 7) s.push_back(v);
  REQUIRE(s.size() == 9);
  const auto w = find_pattern_witness(t13, 0, 1, s);
  REQUIRE(w.has_value());
  const auto [a, b] = *w;
  CHECK(t13.square_difference(0, a));
  CHECK(t13.square_difference(a, b));
  CHECK(t13.square_difference(b, 1));
  CHECK_FALSE(t13.square_difference(0, b));
  CHECK_FALSE(t13.square_difference(1, a));

  const std::vector<std::uint64_t> two{2};
  CHECK_FALSE(find_pattern_witness(t13, 0, 1, two).has_value());
  CHECK(kind_of([&] { find_pattern_witness(t13, 0, 2, two); }) == ErrorKind::InvalidPair);
  const std::vector<std::uint64_t> has_x{0, 5};
  CHECK(kind_of([&] { find_pattern_witness(t13, 0, 1, has_x); }) == ErrorKind::InvalidPair);

  // q = 9 sits below the corollary's range; the search still answers.
  const ResidueTable t9(make_field_of_order(9));
  std::uint64_t c = 1;
  while (!t9.is_nonzero_square(c)) ++c;
  std::vector<std::uint64_t> s9;
  for (std::uint64_t v = 0; v < 9; ++v)
    if (v != 0 && v != c) s9.push_back(v);
  CHECK_NOTHROW(find_pattern_witness(t9, 0, c, s9));
}

TEST_CASE("witness search matches brute force over all ordered pairs") {
  SplitMix64 rng(5);
  for (std::uint64_t q : {13, 17, 25, 29}) {
    const ResidueTable t(make_field_of_order(q));
    std::uint64_t c = 1;
    while (!t.is_nonzero_square(c)) ++c;
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = random_subset(rng, q, 0, c, 1 + rng.below(q - 2));
      std::optional<std::pair<std::uint64_t, std::uint64_t>> brute;
      for (std::uint64_t w : s) {
        for (std::uint64_t z : s) {
          if (t.square_difference(0, w) && t.square_difference(w, z) && t.square_difference(z, c) &&
              !t.square_difference(0, z) && !t.square_difference(c, w)) {
            brute = std::pair{w, z};
            break;
          }
        }
        if (brute) break;
      }
      CHECK(find_pattern_witness(t, 0, c, s) == brute);
    }
  }
}

TEST_CASE("exhaustive corollary counts") {
  const auto r13 = verify_corollary(13, CorollaryMode::Exhaustive);
  CHECK(r13.subsets_tested == 67);
  CHECK(r13.min_size == 9);
  CHECK(r13.failures.empty());
  CHECK(r13.pair == std::pair<std::uint64_t, std::uint64_t>{0, 1});

  const auto r17 = verify_corollary(17, CorollaryMode::Exhaustive, 0, 0, 2);
  CHECK(r17.subsets_tested == 576);
  CHECK(r17.failures.empty());

  for (std::uint64_t q : {9, 13, 17, 25}) {
    const auto r = verify_corollary(q, CorollaryMode::Exhaustive);
    std::uint64_t want = 0;
    for (std::uint64_t s = r.min_size; s <= q - 2; ++s) want += binom(q - 2, s);
    CHECK(r.subsets_tested == want);
    CHECK(r.min_size == 3 * (q - 1) / 4);
  }
}

TEST_CASE("sampled corollary runs are reproducible and clean") {
  const auto a = verify_corollary(29, CorollaryMode::Sampled, 7, 5000, 1);
  const auto b = verify_corollary(29, CorollaryMode::Sampled, 7, 5000, 3);
  CHECK(a.subsets_tested == 5000);
  CHECK(a.failures.empty());
  CHECK(a.failures == b.failures);
  CHECK(verify_corollary(25, CorollaryMode::Sampled, 1, 2000).failures.empty());
}

TEST_CASE("verify_corollary errors") {
  CHECK(kind_of([] { verify_corollary(5, CorollaryMode::Exhaustive); }) == ErrorKind::InvalidOrder);
  CHECK(kind_of([] { verify_corollary(7, CorollaryMode::Exhaustive); }) == ErrorKind::InvalidOrder);
  CHECK(kind_of([] { verify_corollary(21, CorollaryMode::Exhaustive); }) == ErrorKind::InvalidOrder);
  CHECK(kind_of([] { verify_corollary(49, CorollaryMode::Exhaustive); }) == ErrorKind::TooLarge);
}

TEST_CASE("a witness is an edge of the local bipartite graph of the Paley graph") {
  SplitMix64 rng(11);
  for (std::uint64_t q : {13, 17, 29, 37}) {
    const Graph g = paley_graph(q);
    const ResidueTable t(make_field_of_order(q));
    std::uint64_t c = 1;
    while (!t.is_nonzero_square(c)) ++c;
    const auto local = local_bipartite(g, 0, static_cast<VertexId>(c));
    const bool perfect = max_matching(local).perfect;
    for (int trial = 0; trial < 100; ++trial) {
      const std::uint64_t size = 3 * (q - 1) / 4 + rng.below(q - 1 - 3 * (q - 1) / 4);
      const auto s = random_subset(rng, q, 0, c, size);
      bool edge_inside = false;
      for (const auto& [l, r] : local.edges) {
        edge_inside |= std::binary_search(s.begin(), s.end(), local.left[l]) &&
                       std::binary_search(s.begin(), s.end(), local.right[r]);
      }
      const auto w = find_pattern_witness(t, 0, c, s);
      CHECK(w.has_value() == edge_inside);
      if (perfect) CHECK(w.has_value());
    }
  }
}

TEST_CASE("witness existence is invariant under affine maps by squares") {
  SplitMix64 rng(3);
  for (std::uint64_t q : {13, 25}) {
    const ResidueTable t(make_field_of_order(q));
    const auto& f = t.field();
    std::uint64_t c = 1;
    while (!t.is_nonzero_square(c)) ++c;
    for (int trial = 0; trial < 100; ++trial) {
      std::uint64_t a = 1 + rng.below(q - 1);
      while (!t.is_nonzero_square(a)) a = 1 + rng.below(q - 1);
      const std::uint64_t shift = rng.below(q);
      auto map = [&](std::uint64_t v) { return f.index_of(f.add(f.mul(f.element(a), f.element(v)), f.element(shift))); };
      const auto s = random_subset(rng, q, 0, c, 2 + rng.below(q - 3));
      std::vector<std::uint64_t> image;
      for (auto v : s) image.push_back(map(v));
      std::sort(image.begin(), image.end());
      CHECK(find_pattern_witness(t, 0, c, s).has_value() == find_pattern_witness(t, map(0), map(c), image).has_value());
    }
  }
}
