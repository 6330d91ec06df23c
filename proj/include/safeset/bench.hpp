#pragma once

#include <cstdint>
#include <vector>

#include "safeset/report.hpp"
#include "safeset/size.hpp"

namespace safeset {

struct BenchRow {
  int lsc = 0;
  int n = 0;
  int components = 0;
  std::uint64_t subsets_examined = 0;
  /// Sum of 2^|C_i| over the strong components.
  std::uint64_t closed_form = 0;
  double wall_seconds = 0.0;
  Size s;
};

struct BenchResult {
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;
};

/// Largest component size the benchmark accepts.
inline constexpr int kBenchMaxLsc = 20;

/// For each L, chains ceil(n/L) random strong semicomplete parts of size L
/// (the last one holds the remainder) and runs the dynamic program on the
/// result. Parts come from one generator seeded with `seed`, by rejection
/// sampling random_semicomplete(L, 0.25) until the draw is strong.
BenchResult bench_dp(const std::vector<int>& lsc_values, int n, std::uint64_t seed, int threads = 1);

RunReport bench_report(const BenchResult& result);

}  // namespace safeset
