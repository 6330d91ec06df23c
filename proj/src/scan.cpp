#include <algorithm>
#include <thread>

#include "safeset/bit_graph.hpp"
#include "safeset/errors.hpp"
#include "safeset/solvers.hpp"

namespace safeset {

namespace {

std::vector<Mask> tournament_out_masks(int n, std::uint64_t index) {
  std::vector<Mask> out(n, 0);
  int e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++e) {
      if ((index >> e) & 1U)
        out[i] |= Mask{1} << j;
      else
        out[j] |= Mask{1} << i;
    }
  return out;
}

Size first_size(const BitGraph& g, bool strong) {
  Size found;
  for_each_subset_by_size(g.order(), 1, g.order(), [&](Mask m) {
    if ((!strong || g.is_strong(m)) && g.is_safe_set(m)) {
      found = Size(static_cast<std::size_t>(popcount(m)));
      return true;
    }
    return false;
  });
  return found;
}

struct Extreme {
  Size value;
  std::uint64_t witness = 0;
  bool set = false;
};

struct Partial {
  std::uint64_t matching = 0;
  Extreme s_min, s_max, ss_min, ss_max;
};

// Strict comparisons keep the first witness in enumeration order.
void offer_min(Extreme& e, Size value, std::uint64_t index) {
  if (!e.set || value < e.value) e = {value, index, true};
}
void offer_max(Extreme& e, Size value, std::uint64_t index) {
  if (!e.set || value > e.value) e = {value, index, true};
}

Partial scan_range(int n, int k, std::uint64_t begin, std::uint64_t end) {
  Partial p;
  for (std::uint64_t index = begin; index < end; ++index) {
    const auto out = tournament_out_masks(n, index);
    const BitGraph g = BitGraph::from_out_masks(out);
    if (exhaustive_connectivity(g, k + 1) != k) continue;
    ++p.matching;
    const Size s = first_size(g, false);
    const Size ss = first_size(g, true);
    offer_min(p.s_min, s, index);
    offer_max(p.s_max, s, index);
    offer_min(p.ss_min, ss, index);
    offer_max(p.ss_max, ss, index);
  }
  return p;
}

void merge_min(Extreme& into, const Extreme& from) {
  if (from.set && (!into.set || from.value < into.value)) into = from;
}
void merge_max(Extreme& into, const Extreme& from) {
  if (from.set && (!into.set || from.value > into.value)) into = from;
}

}  // namespace

Digraph tournament_from_index(int n, std::uint64_t index) {
  return BitGraph::from_out_masks(tournament_out_masks(n, index)).to_digraph();
}

ScanResult extremal_scan(int n, int k, const ScanOptions& options) {
  if (n < 1) throw InputError("scan needs n >= 1");
  if (k < 0) throw InputError("connectivity k must be non-negative");
  if (n > 7)
    throw RefusedError("scan enumerates 2^(n(n-1)/2) labeled tournaments; n = " +
                       std::to_string(n) + " exceeds the limit of 7");
  if (n == 7 && !options.allow_n7)
    throw RefusedError("n = 7 enumerates 2^21 tournaments and is gated; pass --allow-n7");

  ScanResult result;
  result.n = n;
  result.k = k;
  const int pairs = n * (n - 1) / 2;
  result.tournaments = std::uint64_t{1} << pairs;

  const std::uint64_t total = result.tournaments;
  const std::uint64_t chunks = std::clamp<std::uint64_t>(options.threads, 1, total);
  std::vector<Partial> partial(chunks);
  if (chunks == 1) {
    partial[0] = scan_range(n, k, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t t = 0; t < chunks; ++t) {
      const std::uint64_t begin = total * t / chunks;
      const std::uint64_t end = total * (t + 1) / chunks;
      pool.emplace_back([&, t, begin, end] { partial[t] = scan_range(n, k, begin, end); });
    }
    for (auto& th : pool) th.join();
  }

  Partial merged;
  for (const Partial& p : partial) {
    merged.matching += p.matching;
    merge_min(merged.s_min, p.s_min);
    merge_max(merged.s_max, p.s_max);
    merge_min(merged.ss_min, p.ss_min);
    merge_max(merged.ss_max, p.ss_max);
  }
  result.matching = merged.matching;
  if (result.matching > 0) {
    result.s_min = merged.s_min.value;
    result.s_max = merged.s_max.value;
    result.ss_min = merged.ss_min.value;
    result.ss_max = merged.ss_max.value;
    result.s_min_witness = tournament_from_index(n, merged.s_min.witness);
    result.s_max_witness = tournament_from_index(n, merged.s_max.witness);
    result.ss_min_witness = tournament_from_index(n, merged.ss_min.witness);
    result.ss_max_witness = tournament_from_index(n, merged.ss_max.witness);
  }
  return result;
}

}  // namespace safeset
