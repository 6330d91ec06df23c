#include "safeset/bit_graph.hpp"

#include <algorithm>

#include "safeset/errors.hpp"

namespace safeset {

BitGraph::BitGraph(const Digraph& d) {
  if (d.order() > kMaxOrder)
    throw RefusedError("bit-parallel search supports at most 64 vertices, got " +
                       std::to_string(d.order()));
  n_ = d.order();
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : d.out_neighbors(u)) {
      out_[u] |= Mask{1} << v;
      in_[v] |= Mask{1} << u;
    }
}

BitGraph::BitGraph(const Digraph& d, std::span<const Vertex> vertices) {
  if (vertices.size() > static_cast<std::size_t>(kMaxOrder))
    throw RefusedError("bit-parallel search supports at most 64 vertices");
  n_ = static_cast<int>(vertices.size());
  std::vector<int> local(d.order(), -1);
  for (int i = 0; i < n_; ++i) local[vertices[i]] = i;
  for (int i = 0; i < n_; ++i)
    for (Vertex w : d.out_neighbors(vertices[i]))
      if (local[w] != -1) {
        out_[i] |= Mask{1} << local[w];
        in_[local[w]] |= Mask{1} << i;
      }
}

BitGraph BitGraph::from_out_masks(std::span<const Mask> out) {
  if (out.size() > static_cast<std::size_t>(kMaxOrder))
    throw RefusedError("bit-parallel search supports at most 64 vertices");
  BitGraph g;
  g.n_ = static_cast<int>(out.size());
  for (int u = 0; u < g.n_; ++u) {
    g.out_[u] = out[u];
    for (Mask o = out[u]; o; o &= o - 1) g.in_[std::countr_zero(o)] |= Mask{1} << u;
  }
  return g;
}

Mask BitGraph::out_union(Mask set) const {
  Mask result = 0;
  while (set) {
    result |= out_[std::countr_zero(set)];
    set &= set - 1;
  }
  return result;
}

Mask BitGraph::forward_reach(int v, Mask allowed) const {
  Mask reached = Mask{1} << v;
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= out_[std::countr_zero(f)];
    frontier = next & allowed & ~reached;
    reached |= frontier;
  }
  return reached;
}

Mask BitGraph::backward_reach(int v, Mask allowed) const {
  Mask reached = Mask{1} << v;
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= in_[std::countr_zero(f)];
    frontier = next & allowed & ~reached;
    reached |= frontier;
  }
  return reached;
}

void BitGraph::components(Mask allowed, MaskComponents& result) const {
  result.count = 0;
  Mask remaining = allowed;
  while (remaining) {
    const int v = std::countr_zero(remaining);
    // Removed vertices form whole components, so searching inside
    // `remaining` finds the same component as searching inside `allowed`.
    const Mask comp = forward_reach(v, remaining) & backward_reach(v, remaining);
    result.masks[result.count++] = comp;
    remaining &= ~comp;
  }
}

bool BitGraph::is_strong(Mask allowed) const {
  if (!allowed) return false;
  const int v = std::countr_zero(allowed);
  return forward_reach(v, allowed) == allowed && backward_reach(v, allowed) == allowed;
}

bool BitGraph::is_acyclic(Mask allowed) const {
  // Repeatedly strip vertices with no in-neighbor among the rest.
  Mask rest = allowed;
  bool progress = true;
  while (rest && progress) {
    progress = false;
    for (Mask r = rest; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (!(in_[v] & rest)) {
        rest &= ~(Mask{1} << v);
        progress = true;
      }
    }
  }
  return rest == 0;
}

bool BitGraph::is_safe_set(Mask s) const {
  if (!s) return false;
  MaskComponents inside, outside;
  components(s, inside);
  components(all() & ~s, outside);
  for (Mask m : outside.view()) {
    const Mask reach = out_union(m);
    if (!(reach & s)) return false;
    const int size = popcount(m);
    for (Mask n : inside.view())
      if ((reach & n) && size > popcount(n)) return false;
  }
  return true;
}

bool BitGraph::is_in_dominating(Mask x) const {
  for (Mask rest = all() & ~x; rest; rest &= rest - 1)
    if (!(out_[std::countr_zero(rest)] & x)) return false;
  return true;
}

Digraph BitGraph::to_digraph() const {
  Digraph d(n_);
  for (int u = 0; u < n_; ++u)
    for (Mask o = out_[u]; o; o &= o - 1) d.add_arc(u, std::countr_zero(o));
  return d;
}

int exhaustive_connectivity(const BitGraph& g, int cap) {
  const int n = g.order();
  if (n <= 1 || cap <= 0 || !g.is_strong(g.all())) return 0;
  int answer = std::min(n - 1, cap);
  // Deleting n-1 vertices leaves a single vertex, which is strong.
  for_each_subset_by_size(n, 1, std::min(n - 2, cap - 1), [&](Mask removed) {
    if (!g.is_strong(g.all() & ~removed)) {
      answer = popcount(removed);
      return true;
    }
    return false;
  });
  return answer;
}

}  // namespace safeset
