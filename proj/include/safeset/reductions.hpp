#pragma once

#include <string>
#include <utility>
#include <vector>

#include "safeset/cnf.hpp"
#include "safeset/digraph.hpp"

namespace safeset {

/// Serializable description of a gadget: what each target vertex stands for
/// and how optimum values relate (|target| = |source| + size_offset).
struct ReductionMap {
  std::string source_problem;
  std::string target_problem;
  int size_offset = 0;
  /// Role label of every target vertex, indexed by vertex id.
  std::vector<std::string> target_roles;
  /// Source item -> target vertices it corresponds to.
  std::vector<std::pair<std::string, std::vector<Vertex>>> correspondences;
};

// -- set cover (hitting-set form) -> in-dominating set in a DAG --

struct SetCoverInstance {
  int ground_size = 0;
  /// Elements are 1-based.
  std::vector<std::vector<int>> sets;
};

/// Elements are 1-based; Z hits every set.
using Cover = std::vector<int>;

bool is_cover(const SetCoverInstance& inst, const Cover& z);
/// Smallest hitting set by exhaustive search over subsets of the ground set.
Cover min_cover_brute(const SetCoverInstance& inst);

struct SetCoverGadget {
  Digraph digraph;
  ReductionMap map;
  int num_sets = 0;
  int ground_size = 0;
  std::vector<std::vector<int>> sets;

  Vertex set_vertex(int i) const { return i - 1; }                      // s_i
  Vertex element_vertex(int j) const { return num_sets + j - 1; }       // v_j
  Vertex sink() const { return num_sets + ground_size; }                // z

  /// Z -> {v_j : x_j in Z} + {z}.
  VertexSet forward(const Cover& z) const;
  /// In-dominating X -> {x_j : v_j in X}, with a chosen s_i replaced by the
  /// smallest element of S_i.
  Cover backward(const VertexSet& x) const;
};

/// Vertices s_1..s_m, v_1..v_n, z; arcs s_i -> v_j for x_j in S_i and
/// v_j -> z. Empty sets are rejected.
SetCoverGadget setcover_to_indominating(const SetCoverInstance& inst);

// -- 3-SAT -> irreducible 3-SAT --

struct IrreducibleResult {
  CnfFormula formula;
  /// Original variable for each remaining variable (index i-1 for x_i).
  std::vector<int> kept_variables;
  /// Indices of the original clauses that were kept, in order.
  std::vector<int> kept_clauses;
  /// For every deleted clause, the literal (original numbering) of the
  /// variable it was matched to; setting these satisfies all deleted clauses.
  std::vector<int> forced_literals;
  int source_vars = 0;

  /// Assignment of the reduced formula -> assignment of the original one.
  Assignment extend(const Assignment& reduced) const;
};

/// Repeatedly removes a Hall-deficient variable set U (variables reachable by
/// alternating paths from an unmatched variable) together with the clauses
/// N(U), until B(F) has a matching covering every variable.
IrreducibleResult make_irreducible(const CnfFormula& f);

// -- irreducible 3-SAT -> traceable 4-SAT --

struct TraceableSat4 {
  CnfFormula formula;
  /// Hamiltonian path of G(formula) in incidence_structures numbering.
  std::vector<int> path;
  ReductionMap map;
  /// Normalized 3-SAT instance size before doubling (both even, m' > n'+1).
  int normalized_vars = 0;
  int normalized_clauses = 0;
  int source_vars = 0;

  /// Extends a satisfying assignment of the input.
  Assignment forward(const Assignment& source) const;
  /// Restricts an assignment of the output to the input variables.
  Assignment backward(const Assignment& target) const;
};

/// Pads to even n' and m' with m' > n'+1, then doubles every clause with the
/// fresh variable x_{n'+1} and its negation. Output clauses are numbered in
/// the order the hamiltonian path visits them.
TraceableSat4 sat3_to_traceable_sat4(const CnfFormula& f);

// -- traceable 4-SAT -> traceable acyclic digraph --

struct TraceableDagGadget {
  Digraph digraph;
  /// An in-dominating set of size k exists iff the formula is satisfiable.
  int k = 0;
  /// Hamiltonian path of the DAG: clause/variable path, literal path, u.
  std::vector<Vertex> hamiltonian_path;
  ReductionMap map;

  int clauses = 0;
  int variables = 0;
  /// Normalized variable index for each input variable, and whether its
  /// polarity was flipped.
  std::vector<int> variable_position;
  std::vector<bool> variable_flipped;

  Vertex clause_vertex(int j) const { return j - 1; }                              // c_j
  Vertex variable_vertex(int i) const { return clauses + i - 1; }                  // v_i
  Vertex positive_vertex(int i) const { return clauses + variables + 2 * (i - 1); }  // w_i
  Vertex negative_vertex(int i) const { return positive_vertex(i) + 1; }           // ~w_i
  Vertex sink() const { return clauses + 3 * variables; }                          // u

  /// Satisfying assignment of the input formula -> in-dominating set of size k.
  VertexSet forward(const Assignment& phi) const;
  /// In-dominating set -> assignment of the input formula. Clause and
  /// variable vertices are first exchanged for literal vertices they share
  /// with their path predecessor.
  Assignment backward(const VertexSet& z) const;
  /// The exchange step alone: an in-dominating set of no larger size inside
  /// the literal vertices and u.
  VertexSet normalize_dominating_set(const VertexSet& z) const;
};

/// `path` is a hamiltonian path of G(f) (incidence_structures numbering)
/// starting and ending at clause vertices.
TraceableDagGadget traceable_sat4_to_dag(const CnfFormula& f, const std::vector<int>& path);

// -- feedback vertex set in a tournament -> safe set in a tournament --

struct FvsGadget {
  Digraph tournament;
  ReductionMap map;
  Vertex sink = -1;

  VertexSet forward(const VertexSet& fvs) const;
  VertexSet backward(const VertexSet& safe_set) const;
};

/// Adds a vertex x dominated by every vertex of T.
FvsGadget fvs_to_safeset(const Digraph& t);

}  // namespace safeset
