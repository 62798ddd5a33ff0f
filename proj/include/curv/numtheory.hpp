#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curv/field.hpp"

namespace curv {

// Quadratic character of GF(q) by element index.
class ResidueTable {
 public:
  explicit ResidueTable(const FiniteField& f);

  const FiniteField& field() const { return field_; }
  bool is_nonzero_square(std::uint64_t a) const { return square_[a]; }
  // a - b is a non-zero square.
  bool square_difference(std::uint64_t a, std::uint64_t b) const { return square_[field_.sub_index(a, b)]; }

 private:
  FiniteField field_;
  std::vector<bool> square_;
};

// First (w, z) in index order with w, z in s such that x-w, w-z, z-y are
// non-zero squares and x-z, y-w are not. Throws InvalidPair when x-y is not
// a non-zero square or s contains x or y.
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_pattern_witness(const ResidueTable& table, std::uint64_t x,
                                                                            std::uint64_t y,
                                                                            const std::vector<std::uint64_t>& s);

enum class CorollaryMode { Exhaustive, Sampled };

struct CorollaryReport {
  std::uint64_t q = 0;
  std::pair<std::uint64_t, std::uint64_t> pair;  // (0, smallest non-zero square)
  std::uint64_t min_size = 0;                    // 3(q-1)/4
  std::uint64_t subsets_tested = 0;
  std::vector<std::vector<std::uint64_t>> failures;  // sorted
  CorollaryMode mode = CorollaryMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

inline constexpr std::uint64_t kMaxExhaustiveSubsets = 50'000'000;

// Every S in GF(q) \ {x, y} with |S| >= 3(q-1)/4 must contain a witness.
// Exhaustive mode walks all such S in colex order per size; sampled mode
// draws `trials` of them uniformly with a SplitMix64 stream. Throws
// InvalidOrder unless q > 5 is a prime power with q = 1 mod 4, and TooLarge
// when the exhaustive count exceeds 5e7.
CorollaryReport verify_corollary(std::uint64_t q, CorollaryMode mode, std::uint64_t seed = 0,
                                 std::uint64_t trials = 0, unsigned threads = 1);

std::string to_string(CorollaryMode mode);

}  // namespace curv
