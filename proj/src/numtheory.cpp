#include "curv/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "curv/error.hpp"
#include "curv/parallel.hpp"
#include "curv/rng.hpp"

namespace curv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u128 kU128Max = ~u128{0};

u128 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 c = 1;
  for (u64 i = 1; i <= k; ++i) {
    const u64 factor = n - k + i;
    if (c > kU128Max / factor) throw Error(ErrorKind::TooLarge, "subset count overflows 128 bits");
    c = c * factor / i;
  }
  return c;
}

u128 uniform_below(SplitMix64& rng, u128 bound) {
  if (bound <= UINT64_MAX) return rng.below(static_cast<u64>(bound));
  const u128 limit = kU128Max - kU128Max % bound;
  for (;;) {
    const u128 x = (static_cast<u128>(rng.next()) << 64) | rng.next();
    if (x < limit) return x % bound;
  }
}

// Advances c (strictly increasing, values < n) to the next combination in
// colex order; false after the last one.
bool next_colex(std::vector<u64>& c, u64 n) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    const u64 cap = i + 1 < k ? c[i + 1] : n;
    if (c[i] + 1 < cap) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

ResidueTable::ResidueTable(const FiniteField& f) : field_(f), square_(f.order(), false) {
  for (u64 i = 1; i < f.order(); ++i) square_[i] = curv::is_nonzero_square(f, f.element(i));
}

std::optional<std::pair<u64, u64>> find_pattern_witness(const ResidueTable& table, u64 x, u64 y,
                                                        const std::vector<u64>& s) {
  const u64 q = table.field().order();
  if (x >= q || y >= q) throw Error(ErrorKind::InvalidPair, "element index out of range");
  if (!table.square_difference(x, y)) throw Error(ErrorKind::InvalidPair, "x - y is not a non-zero square");
  std::vector<u64> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::vector<u64> left, right;
  for (u64 v : sorted) {
    if (v >= q) throw Error(ErrorKind::InvalidPair, "element index out of range");
    if (v == x || v == y) throw Error(ErrorKind::InvalidPair, "S must avoid x and y");
    // x - w square, y - w not: w in N_x. z - y square, x - z not: z in N_y.
    if (table.square_difference(x, v) && !table.square_difference(y, v)) left.push_back(v);
    if (table.square_difference(v, y) && !table.square_difference(x, v)) right.push_back(v);
  }
  for (u64 w : left) {
    for (u64 z : right) {
      if (table.square_difference(w, z)) return std::pair{w, z};
    }
  }
  return std::nullopt;
}

std::string to_string(CorollaryMode mode) { return mode == CorollaryMode::Exhaustive ? "exhaustive" : "sampled"; }

CorollaryReport verify_corollary(u64 q, CorollaryMode mode, u64 seed, u64 trials, unsigned threads) {
  const auto invalid = [q](const std::string& why) {
    return Error(ErrorKind::InvalidOrder, "q = " + std::to_string(q) + ": " + why);
  };
  if (q <= 5 || q % 4 != 1) throw invalid("need q > 5 and q = 1 mod 4");
  std::pair<std::uint32_t, std::uint32_t> pm;
  try {
    pm = prime_power_decomposition(q);
  } catch (const Error&) {
    throw invalid("not a prime power");
  }
  if (q > (u64{1} << 16)) throw Error(ErrorKind::TooLarge, "corollary check is capped at q = 65536");
  const ResidueTable table(make_field(pm.first, pm.second));

  CorollaryReport report;
  report.q = q;
  report.mode = mode;
  report.min_size = 3 * (q - 1) / 4;
  u64 c = 1;
  while (!table.is_nonzero_square(c)) ++c;
  report.pair = {0, c};

  std::vector<u64> others;
  for (u64 v = 0; v < q; ++v) {
    if (v != 0 && v != c) others.push_back(v);
  }
  const u64 n_others = others.size();

  std::vector<std::vector<u64>> batch;
  auto flush = [&] {
    std::vector<char> failed(batch.size(), 0);
    parallel_for(batch.size(), threads, [&](std::size_t i) {
      failed[i] = !find_pattern_witness(table, 0, c, batch[i]).has_value();
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (failed[i]) report.failures.push_back(batch[i]);
    }
    report.subsets_tested += batch.size();
    batch.clear();
  };
  constexpr std::size_t kBatch = 8192;

  if (mode == CorollaryMode::Exhaustive) {
    u128 total = 0;
    for (u64 size = report.min_size; size <= n_others; ++size) total += binomial(n_others, size);
    if (total > kMaxExhaustiveSubsets) throw Error(ErrorKind::TooLarge, "too many subsets for exhaustive mode");
    for (u64 size = report.min_size; size <= n_others; ++size) {
      std::vector<u64> comb(size);
      std::iota(comb.begin(), comb.end(), u64{0});
      do {
        std::vector<u64> subset(size);
        for (u64 i = 0; i < size; ++i) subset[i] = others[comb[i]];
        batch.push_back(std::move(subset));
        if (batch.size() == kBatch) flush();
      } while (next_colex(comb, n_others));
    }
  } else {
    report.seed = seed;
    report.trials = trials;
    std::vector<u128> cumulative;
    u128 total = 0;
    for (u64 size = report.min_size; size <= n_others; ++size) {
      const u128 w = binomial(n_others, size);
      if (total > kU128Max - w) throw Error(ErrorKind::TooLarge, "subset count overflows 128 bits");
      total += w;
      cumulative.push_back(total);
    }
    SplitMix64 rng(seed);
    std::vector<u64> pool(n_others);
    for (u64 t = 0; t < trials; ++t) {
      const u128 r = uniform_below(rng, total);
      const u64 size = report.min_size + static_cast<u64>(std::upper_bound(cumulative.begin(), cumulative.end(), r) -
                                                          cumulative.begin());
      pool = others;
      for (u64 i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(n_others - i)]);
      std::vector<u64> subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
      std::sort(subset.begin(), subset.end());
      batch.push_back(std::move(subset));
      if (batch.size() == kBatch) flush();
    }
  }
  flush();
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

}  // namespace curv
