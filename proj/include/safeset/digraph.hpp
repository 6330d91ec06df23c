#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace safeset {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates `vertices` in place and returns it.
VertexSet normalize(VertexSet vertices);

/// Simple digraph on dense vertex ids 0..n-1. Self-loops are rejected,
/// parallel arcs collapse, and digons (u->v and v->u) are allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  static Digraph from_arcs(int n, std::span<const std::pair<Vertex, Vertex>> arcs);

  int order() const { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const { return arc_count_; }

  /// Adds u->v. Returns false if the arc was already present.
  bool add_arc(Vertex u, Vertex v);
  bool has_arc(Vertex u, Vertex v) const;

  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[check(v)]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[check(v)]; }

  /// All arcs in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  /// Appends a fresh vertex and returns its id.
  Vertex add_vertex(std::string label = {});

  bool has_labels() const { return !labels_.empty(); }
  /// Display name: the stored label, or the decimal id when unlabeled.
  std::string label(Vertex v) const;
  void set_label(Vertex v, std::string label);
  const std::vector<std::string>& labels() const { return labels_; }

  /// Subdigraph induced by `vertices`, relabeled 0..k-1 in the given order.
  Digraph induced(std::span<const Vertex> vertices) const;

  /// Arc-set equality; labels are decorative and ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  Vertex check(Vertex v) const;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::string> labels_;
  std::size_t arc_count_ = 0;
};

/// Strong components in a topological order of the component DAG.
struct Condensation {
  std::vector<VertexSet> components;
  std::vector<int> comp_of;

  std::size_t size() const { return components.size(); }
};

/// Strong components with every inter-component arc going from a lower to a
/// higher index. Among valid orders the one placing the component with the
/// smallest vertex id first is chosen, so the result is deterministic.
Condensation scc_decompose(const Digraph& d);

/// Component id per vertex for the subdigraph induced by `members`
/// (members[v] != 0); -1 for excluded vertices. Ids are 0..count-1 in no
/// particular order.
struct InducedComponents {
  std::vector<int> comp_of;
  std::vector<int> sizes;
};
InducedComponents induced_components(const Digraph& d, std::span<const char> members);

struct Classification {
  bool is_tournament = false;
  bool is_semicomplete = false;
  bool is_acyclic = false;
  bool is_strong = false;
  bool is_oriented = false;
};

Classification classify(const Digraph& d);

/// kappa(D): largest k such that deleting any fewer than k vertices leaves a
/// strong digraph. 0 for non-strong digraphs and for the one-vertex digraph.
/// Computed by unit-capacity max flow on the vertex-split network, minimised
/// over ordered pairs (u,v) without an arc u->v.
int vertex_connectivity(const Digraph& d);

/// Size of a largest set with no arc in either direction between its members.
int independence_number(const Digraph& d);

/// Size of a largest strong component.
int lsc(const Digraph& d);

}  // namespace safeset
