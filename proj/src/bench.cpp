#include "safeset/bench.hpp"

#include <algorithm>
#include <chrono>

#include "safeset/errors.hpp"
#include "safeset/generators.hpp"

namespace safeset {

namespace {

Digraph strong_part(int size, Rng& rng) {
  for (;;) {
    Digraph part = random_semicomplete(size, 0.25, rng);
    if (classify(part).is_strong) return part;
  }
}

}  // namespace

BenchResult bench_dp(const std::vector<int>& lsc_values, int n, std::uint64_t seed, int threads) {
  if (lsc_values.empty()) throw ParameterError("bench needs at least one lsc value");
  for (int lsc : lsc_values) {
    if (lsc < 1) throw ParameterError("lsc values must be positive");
    if (lsc > kBenchMaxLsc)
      throw RefusedError("lsc " + std::to_string(lsc) + " exceeds the 2^" +
                         std::to_string(kBenchMaxLsc) + " subset cap");
  }
  const int largest = *std::max_element(lsc_values.begin(), lsc_values.end());
  if (n < largest) throw ParameterError("n must be at least the largest lsc value");

  BenchResult result;
  result.seed = seed;
  Rng rng(seed);
  for (int lsc : lsc_values) {
    std::vector<Digraph> parts;
    for (int placed = 0; placed < n; placed += lsc) parts.push_back(strong_part(std::min(lsc, n - placed), rng));
    const Digraph d = chain_components(parts);

    BenchRow row;
    row.lsc = lsc;
    row.n = n;
    row.components = static_cast<int>(parts.size());
    for (const Digraph& part : parts) row.closed_form += std::uint64_t{1} << part.order();
    const auto start = std::chrono::steady_clock::now();
    const DpTable table = dp_tables(d, threads);
    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.subsets_examined = table.subsets_examined;
    row.s = Size::infeasible();
    for (int b = 1; b <= table.lsc; ++b) row.s = std::min(row.s, table.cell(1, b).size);
    result.rows.push_back(row);
  }
  return result;
}

RunReport bench_report(const BenchResult& result) {
  RunReport report;
  report.command = "bench";
  report.seed = result.seed;
  Json rows = Json::array();
  for (const BenchRow& row : result.rows) {
    rows.push_back({{"lsc", row.lsc},
                    {"n", row.n},
                    {"components", row.components},
                    {"subsets_examined", row.subsets_examined},
                    {"closed_form", row.closed_form},
                    {"matches_closed_form", row.subsets_examined == row.closed_form},
                    {"wall_seconds", row.wall_seconds},
                    {"s", size_to_json(row.s)}});
    report.timing["dp_lsc_" + std::to_string(row.lsc)] = row.wall_seconds;
  }
  report.result = {{"rows", rows}};
  return report;
}

}  // namespace safeset
