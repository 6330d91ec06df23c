#pragma once

#include <optional>
#include <vector>

#include "safeset/digraph.hpp"

namespace safeset {

/// CNF formula over variables 1..num_vars; literal +i is x_i, -i its negation.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  int max_clause_width = 3;

  /// Throws InputError on an empty clause, an out-of-range literal, or a
  /// clause wider than max_clause_width.
  void validate() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// assignment[i] is the value of x_i; index 0 is unused.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& f, const Assignment& assignment);

/// Exhaustive search over all 2^n assignments (n <= 24).
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

/// Undirected graph as sorted adjacency lists.
using AdjacencyList = std::vector<std::vector<int>>;

/// G(F) and B(F) on a shared vertex numbering: clause j (0-based) is vertex
/// j, variable x_i is vertex m + i - 1.
struct IncidenceStructures {
  int clauses = 0;
  int variables = 0;
  /// Clause-clause edges on a shared literal plus variable-clause edges.
  AdjacencyList g;
  /// Variable-clause edges only.
  AdjacencyList b;
  /// Clause index matched to each variable (index i-1 for x_i), present when
  /// a matching covering every variable exists.
  std::optional<std::vector<int>> matching;

  int clause_vertex(int clause_index) const { return clause_index; }
  int variable_vertex(int var) const { return clauses + var - 1; }
};

IncidenceStructures incidence_structures(const CnfFormula& f);

/// Maximum matching in B(F). Returns, per variable (index i-1 for x_i), the
/// matched clause index or -1.
std::vector<int> max_variable_matching(const CnfFormula& f);

/// True when B(F) has a matching covering every variable.
bool is_irreducible(const CnfFormula& f);

/// Consecutive vertices adjacent and every vertex visited exactly once.
bool is_hamiltonian_path(const AdjacencyList& g, const std::vector<int>& path);
bool is_hamiltonian_path(const Digraph& d, const std::vector<Vertex>& path);

}  // namespace safeset
