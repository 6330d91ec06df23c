#include "safeset/digraph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include <boost/dynamic_bitset.hpp>

#include "safeset/errors.hpp"

namespace safeset {

VertexSet normalize(VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

Digraph::Digraph(int n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  out_.resize(n);
  in_.resize(n);
}

Digraph Digraph::from_arcs(int n, std::span<const std::pair<Vertex, Vertex>> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

Vertex Digraph::check(Vertex v) const {
  if (v < 0 || v >= order())
    throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(order()) + ")");
  return v;
}

bool Digraph::add_arc(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& out = out_[u];
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it != out.end() && *it == v) return false;
  out.insert(it, v);
  auto& in = in_[v];
  in.insert(std::lower_bound(in.begin(), in.end(), u), u);
  ++arc_count_;
  return true;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const auto& out = out_[check(u)];
  return std::binary_search(out.begin(), out.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  return result;
}

Vertex Digraph::add_vertex(std::string label) {
  const Vertex v = order();
  out_.emplace_back();
  in_.emplace_back();
  if (!label.empty() || has_labels()) set_label(v, std::move(label));
  return v;
}

std::string Digraph::label(Vertex v) const {
  check(v);
  if (static_cast<std::size_t>(v) < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

void Digraph::set_label(Vertex v, std::string label) {
  check(v);
  if (labels_.size() < out_.size()) labels_.resize(out_.size());
  labels_[v] = std::move(label);
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (index[check(vertices[i])] != -1) throw InputError("duplicate vertex in induced()");
    index[vertices[i]] = static_cast<int>(i);
  }
  Digraph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : out_[vertices[i]])
      if (index[w] != -1) sub.add_arc(static_cast<Vertex>(i), index[w]);
    if (has_labels()) sub.set_label(static_cast<Vertex>(i), label(vertices[i]));
  }
  return sub;
}

// Iterative Tarjan over the vertices with members[v] != 0.
InducedComponents induced_components(const Digraph& d, std::span<const char> members) {
  const int n = d.order();
  InducedComponents result;
  result.comp_of.assign(n, -1);

  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next out-neighbor position)
  int counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (!members[root] || index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto& out = d.out_neighbors(v);
      if (pos < out.size()) {
        Vertex w = out[pos++];
        if (!members[w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        const int id = static_cast<int>(result.sizes.size());
        int size = 0;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          result.comp_of[w] = id;
          ++size;
        } while (w != v);
        result.sizes.push_back(size);
      }
      const Vertex done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return result;
}

Condensation scc_decompose(const Digraph& d) {
  const int n = d.order();
  std::vector<char> all(n, 1);
  InducedComponents raw = induced_components(d, all);
  const int p = static_cast<int>(raw.sizes.size());

  std::vector<VertexSet> members(p);
  for (Vertex v = 0; v < n; ++v) members[raw.comp_of[v]].push_back(v);

  // Kahn's algorithm keyed by smallest contained vertex id.
  std::vector<std::vector<int>> succ(p);
  std::vector<int> indegree(p, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : d.out_neighbors(u))
      if (raw.comp_of[u] != raw.comp_of[v]) succ[raw.comp_of[u]].push_back(raw.comp_of[v]);
  for (auto& s : succ) {
    s = normalize(std::move(s));
    for (int c : s) ++indegree[c];
  }
  using Key = std::pair<Vertex, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (int c = 0; c < p; ++c)
    if (indegree[c] == 0) ready.emplace(members[c].front(), c);

  Condensation result;
  result.comp_of.assign(n, -1);
  while (!ready.empty()) {
    const int c = ready.top().second;
    ready.pop();
    const int id = static_cast<int>(result.components.size());
    for (Vertex v : members[c]) result.comp_of[v] = id;
    result.components.push_back(std::move(members[c]));
    for (int s : succ[c])
      if (--indegree[s] == 0) ready.emplace(members[s].front(), s);
  }
  return result;
}

Classification classify(const Digraph& d) {
  const int n = d.order();
  Classification c;
  bool semicomplete = true;
  bool oriented = true;
  for (Vertex u = 0; u < n && (semicomplete || oriented); ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool uv = d.has_arc(u, v);
      const bool vu = d.has_arc(v, u);
      if (!uv && !vu) semicomplete = false;
      if (uv && vu) oriented = false;
    }
  }
  std::vector<char> all(n, 1);
  const auto comps = induced_components(d, all);
  c.is_semicomplete = semicomplete;
  c.is_oriented = oriented;
  c.is_tournament = semicomplete && oriented;
  c.is_acyclic = std::all_of(comps.sizes.begin(), comps.sizes.end(), [](int s) { return s == 1; });
  c.is_strong = comps.sizes.size() == 1;
  return c;
}

namespace {

// Residual network for unit vertex capacities: vertex x splits into
// in-node 2x and out-node 2x+1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Digraph& d) : n_(d.order()), head_(2 * n_, -1) {
    for (Vertex x = 0; x < n_; ++x) add_edge(2 * x, 2 * x + 1, 1);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : d.out_neighbors(u)) add_edge(2 * u + 1, 2 * v, 1);
    original_cap_ = cap_;
  }

  // Maximum number of internally disjoint s->t paths, stopping at `limit`.
  int max_paths(Vertex s, Vertex t, int limit) {
    cap_ = original_cap_;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent_edge(2 * n_);
    while (flow < limit) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      parent_edge[source] = -2;
      while (!queue.empty() && parent_edge[sink] == -1) {
        const int x = queue.front();
        queue.pop();
        for (int e = head_[x]; e != -1; e = next_[e]) {
          if (cap_[e] > 0 && parent_edge[to_[e]] == -1) {
            parent_edge[to_[e]] = e;
            queue.push(to_[e]);
          }
        }
      }
      if (parent_edge[sink] == -1) break;
      for (int x = sink; x != source; x = to_[parent_edge[x] ^ 1]) {
        --cap_[parent_edge[x]];
        ++cap_[parent_edge[x] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_edge(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = static_cast<int>(to_.size()) - 1;
  }

  int n_;
  std::vector<int> head_, to_, next_, cap_, original_cap_;
};

}  // namespace

int vertex_connectivity(const Digraph& d) {
  const int n = d.order();
  if (n <= 1) return 0;
  if (!classify(d).is_strong) return 0;
  SplitNetwork network(d);
  int best = n - 1;
  for (Vertex u = 0; u < n && best > 0; ++u)
    for (Vertex v = 0; v < n && best > 0; ++v)
      if (u != v && !d.has_arc(u, v)) best = std::min(best, network.max_paths(u, v, best));
  return best;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Branch and bound for a maximum independent set of the underlying graph.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Digraph& d) : n_(d.order()), adjacent_(n_, Bits(n_)) {
    for (auto [u, v] : d.arcs()) {
      adjacent_[u].set(v);
      adjacent_[v].set(u);
    }
  }

  int run() {
    Bits all(n_);
    all.set();
    search(all, 0);
    return best_;
  }

 private:
  void search(Bits candidates, int chosen) {
    // Vertices with no neighbor among the candidates can always be taken.
    for (;;) {
      bool changed = false;
      for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
        if ((adjacent_[v] & candidates).none()) {
          candidates.reset(v);
          ++chosen;
          changed = true;
        }
      }
      if (!changed) break;
    }
    const int remaining = static_cast<int>(candidates.count());
    if (remaining == 0) {
      best_ = std::max(best_, chosen);
      return;
    }
    if (chosen + remaining <= best_) return;

    std::size_t pivot = Bits::npos;
    std::size_t pivot_degree = 0;
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      const std::size_t degree = (adjacent_[v] & candidates).count();
      if (pivot == Bits::npos || degree > pivot_degree) {
        pivot = v;
        pivot_degree = degree;
      }
    }
    Bits with = candidates & ~adjacent_[pivot];
    with.reset(pivot);
    search(with, chosen + 1);
    candidates.reset(pivot);
    search(candidates, chosen);
  }

  int n_;
  std::vector<Bits> adjacent_;
  int best_ = 0;
};

}  // namespace

int independence_number(const Digraph& d) {
  if (d.order() == 0) return 0;
  return IndependentSetSearch(d).run();
}

int lsc(const Digraph& d) {
  std::vector<char> all(d.order(), 1);
  const auto comps = induced_components(d, all);
  return comps.sizes.empty() ? 0 : *std::max_element(comps.sizes.begin(), comps.sizes.end());
}

}  // namespace safeset
