#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "safeset/digraph.hpp"

namespace safeset {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Next mask with the same popcount in increasing numeric order (Gosper).
/// Caller stops once the result reaches 1 << width.
inline Mask next_same_popcount(Mask x) {
  const Mask t = x | (x - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(x) + 1));
}

/// Calls fn(mask) for every subset of {0..width-1} ordered by increasing
/// cardinality and, within a cardinality, by increasing mask value. Stops
/// early when fn returns true. Sizes are taken from [min_size, max_size].
template <class Fn>
bool for_each_subset_by_size(int width, int min_size, int max_size, Fn&& fn) {
  const Mask limit = width >= 64 ? 0 : (Mask{1} << width);
  for (int k = min_size; k <= max_size && k <= width; ++k) {
    if (k == 0) {
      if (fn(Mask{0})) return true;
      continue;
    }
    Mask m = k == 64 ? ~Mask{0} : (Mask{1} << k) - 1;
    for (;;) {
      if (fn(m)) return true;
      if (k == width) break;
      const Mask next = next_same_popcount(m);
      if (next >= limit || next <= m) break;
      m = next;
    }
  }
  return false;
}

/// Strong components of an induced subdigraph, as vertex masks.
struct MaskComponents {
  std::array<Mask, 64> masks{};
  int count = 0;

  std::span<const Mask> view() const { return {masks.data(), static_cast<std::size_t>(count)}; }
};

/// Bit-parallel adjacency for digraphs on at most 64 vertices. Used by the
/// exhaustive searches and by the per-component work of the dynamic program.
class BitGraph {
 public:
  static constexpr int kMaxOrder = 64;

  BitGraph() = default;
  explicit BitGraph(const Digraph& d);
  /// Subdigraph induced by `vertices`, local index i <-> vertices[i].
  BitGraph(const Digraph& d, std::span<const Vertex> vertices);
  /// Graph whose vertex v has out-neighborhood out[v].
  static BitGraph from_out_masks(std::span<const Mask> out);

  int order() const { return n_; }
  Mask all() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  Mask out(int v) const { return out_[v]; }
  Mask in(int v) const { return in_[v]; }

  Mask out_union(Mask set) const;
  Mask forward_reach(int v, Mask allowed) const;
  Mask backward_reach(int v, Mask allowed) const;

  void components(Mask allowed, MaskComponents& result) const;
  bool is_strong(Mask allowed) const;
  bool is_acyclic(Mask allowed) const;

  /// Safe-set test on the whole graph: S non-empty, every strong component
  /// of D-S has an arc into S, and no such arc enters a smaller component of
  /// D[S].
  bool is_safe_set(Mask s) const;
  bool is_in_dominating(Mask x) const;

  Digraph to_digraph() const;

 private:
  int n_ = 0;
  std::array<Mask, 64> out_{};
  std::array<Mask, 64> in_{};
};

/// Exhaustive kappa: smallest |X| with D-X not strong, capped at n-1;
/// 0 for n <= 1 or non-strong input. With `cap`, returns min(kappa, cap) and
/// stops searching early.
int exhaustive_connectivity(const BitGraph& g, int cap = 64);

}  // namespace safeset
