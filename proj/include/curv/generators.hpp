#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curv/field.hpp"
#include "curv/graph.hpp"

namespace curv {

inline constexpr std::uint64_t kMaxGeneratedVertices = std::uint64_t{1} << 16;

// Vertices are field elements in index order; u ~ v iff u - v is a non-zero
// square. Throws NotPrimePower, NotPaleyOrder (q != 1 mod 4) or TooLarge.
Graph paley_graph(std::uint64_t q);

Graph rook_graph(std::uint32_t k);           // K_k x K_k, vertex (i,j) -> k*i + j
Graph shrikhande_graph();                    // Cayley graph on Z4 x Z4
Graph cocktail_party_graph(std::uint32_t k); // K_2k minus the matching {i, i+k}
Graph johnson_graph(std::uint32_t n, std::uint32_t k);
Graph clebsch_graph();                       // halved 5-cube, SRG(16,10,6,6)
Graph petersen_graph();                      // Kneser(5,2), 2-subsets in lex order
Graph cycle_graph(std::uint32_t n);
Graph complete_graph(std::uint32_t n);
Graph hypercube_graph(std::uint32_t m);

// Dispatch by family name: rook(k), shrikhande, cocktail_party(k),
// johnson(n,k), clebsch, petersen, cycle(n), complete(n), hypercube(m),
// paley(q). Throws UnknownFamily or InvalidParams.
Graph named_graph(std::string_view name, std::span<const std::int64_t> params);

struct CatalogEntry {
  std::string name;
  Graph graph;
  std::optional<SrgParams> srg;  // book parameters when strongly regular
};

// The named families at the sizes used throughout the test and acceptance
// suites, deterministic order.
std::vector<CatalogEntry> named_catalog();

// Random simple connected d-regular graph on n vertices, built by pairing
// degree slots and restarting on loops, repeated edges or disconnection.
// Deterministic for a given seed. Throws InvalidParams when n*d is odd or
// d >= n.
Graph random_regular_graph(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

}  // namespace curv
