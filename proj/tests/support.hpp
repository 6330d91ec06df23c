#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "safeset/bit_graph.hpp"
#include "safeset/cnf.hpp"
#include "safeset/digraph.hpp"
#include "safeset/generators.hpp"
#include "safeset/io.hpp"
#include "safeset/reductions.hpp"
#include "safeset/size.hpp"

namespace safeset::testing {

inline Digraph figure1() { return parse_digraph(read_input(SAFESET_DATA_DIR "/figure1.dg")); }

inline Vertex by_label(const Digraph& d, const std::string& name) {
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.label(v) == name) return v;
  throw std::out_of_range("no vertex labelled " + name);
}

inline VertexSet labelled(const Digraph& d, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* name : names) s.push_back(by_label(d, name));
  return normalize(std::move(s));
}

inline Digraph cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

inline Digraph path(int n) {
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
  return d;
}

inline double uniform(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  return perm;
}

inline Digraph permute(const Digraph& d, const std::vector<int>& perm) {
  Digraph out(d.order());
  for (auto [u, v] : d.arcs()) out.add_arc(perm[u], perm[v]);
  return out;
}

/// Arcs follow a hidden random topological order.
inline Digraph random_dag(int n, double p, Rng& rng) {
  const auto order = random_permutation(n, rng);
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform(rng) < p) d.add_arc(order[i], order[j]);
  return d;
}

inline Digraph random_digraph(int n, double p, Rng& rng) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && uniform(rng) < p) d.add_arc(u, v);
  return d;
}

/// Clauses of width 1..3 over distinct variables.
inline CnfFormula random_cnf(int max_vars, int max_clauses, Rng& rng) {
  CnfFormula f;
  f.num_vars = 1 + static_cast<int>(rng() % max_vars);
  const int clauses = 1 + static_cast<int>(rng() % max_clauses);
  for (int j = 0; j < clauses; ++j) {
    const int width = 1 + static_cast<int>(rng() % std::min(3, f.num_vars));
    auto vars = random_permutation(f.num_vars, rng);
    std::vector<int> clause;
    for (int i = 0; i < width; ++i) clause.push_back((rng() & 1) ? vars[i] + 1 : -(vars[i] + 1));
    f.clauses.push_back(clause);
  }
  return f;
}

inline SetCoverInstance random_setcover(int max_sets, int max_ground, Rng& rng) {
  SetCoverInstance inst;
  inst.ground_size = 1 + static_cast<int>(rng() % max_ground);
  const int sets = 1 + static_cast<int>(rng() % max_sets);
  for (int i = 0; i < sets; ++i) {
    std::vector<int> set;
    for (int x = 1; x <= inst.ground_size; ++x)
      if (rng() % 3 == 0) set.push_back(x);
    if (set.empty()) set.push_back(1 + static_cast<int>(rng() % inst.ground_size));
    inst.sets.push_back(set);
  }
  return inst;
}

inline int smallest_component(const BitGraph& g, Mask s) {
  MaskComponents comps;
  g.components(s, comps);
  int best = 64;
  for (Mask c : comps.view()) best = std::min(best, popcount(c));
  return best;
}

/// Smallest safe set whose smallest strong component has exactly b vertices.
inline Size brute_min_with_smallest(const Digraph& d, int b) {
  const BitGraph g(d);
  Size best = Size::infeasible();
  for_each_subset_by_size(g.order(), 1, g.order(), [&](Mask s) {
    if (g.is_safe_set(s) && smallest_component(g, s) == b) {
      best = Size(static_cast<std::size_t>(popcount(s)));
      return true;
    }
    return false;
  });
  return best;
}

inline VertexSet mask_to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

}  // namespace safeset::testing
