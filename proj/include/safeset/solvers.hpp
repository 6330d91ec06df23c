#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "safeset/digraph.hpp"
#include "safeset/size.hpp"

namespace safeset {

enum class Method { Brute, Dp, Auto };

std::string to_string(Method m);
Method parse_method(const std::string& name);

struct SolveStats {
  std::uint64_t subsets_examined = 0;
  double elapsed_seconds = 0.0;
};

struct SolveResult {
  Size size;
  VertexSet set;
  /// Method that actually ran (Auto is resolved before solving).
  Method method = Method::Brute;
  SolveStats stats;
};

/// Exhaustive searches refuse inputs above this order.
inline constexpr int kBruteForceMaxOrder = 30;

struct SolveOptions {
  Method method = Method::Auto;
  /// Worker threads for the dynamic program; results do not depend on it.
  int threads = 1;
};

/// s(D). Brute force scans non-empty subsets by increasing cardinality, then
/// increasing bitmask, and returns the first safe one. The dynamic program
/// requires a semicomplete digraph; Auto picks it for semicomplete input.
SolveResult min_safe_set(const Digraph& d, const SolveOptions& options = {});

/// ss(D) by brute force; INFEASIBLE when no strong safe set exists.
SolveResult min_strong_safe_set(const Digraph& d);

/// gamma(D). Without a cap, acyclic inputs are searched up to their
/// independence number (which bounds gamma for DAGs); other inputs get a full
/// search. With a cap, INFEASIBLE means nothing of size <= cap exists.
SolveResult min_indominating(const Digraph& d, std::optional<int> alpha_cap = std::nullopt);

/// Minimum feedback vertex set by brute force.
SolveResult min_feedback_vertex_set(const Digraph& d);

// -- dynamic program over the strong components of a semicomplete digraph --

struct DpCell {
  Size size;
  VertexSet set;
  /// Part of the set taken from the row's own component, and the column of
  /// the next row it was combined with (0 for the last row or when empty).
  VertexSet own;
  int next_b = 0;
};

/// rows[a-1][b-1] holds s*(a,b) and S*(a,b) for a = 1..p, b = 1..lsc.
struct DpTable {
  int p = 0;
  int lsc = 0;
  Condensation condensation;
  std::vector<std::vector<DpCell>> rows;
  std::uint64_t subsets_examined = 0;

  const DpCell& cell(int a, int b) const { return rows.at(a - 1).at(b - 1); }
};

/// Largest component the dynamic program accepts (2^L subsets per component).
inline constexpr int kDpMaxComponent = 24;

DpTable dp_tables(const Digraph& d, int threads = 1);

// -- extremal values over all labeled tournaments --

struct ScanOptions {
  bool allow_n7 = false;
  int threads = 1;
};

struct ScanResult {
  int n = 0;
  int k = 0;
  std::uint64_t tournaments = 0;
  /// Tournaments with kappa = k; the extremal fields are set only if > 0.
  std::uint64_t matching = 0;
  Size s_min, s_max, ss_min, ss_max;
  std::optional<Digraph> s_min_witness, s_max_witness, ss_min_witness, ss_max_witness;

  bool empty() const { return matching == 0; }
};

/// Enumerates the 2^C(n,2) labeled tournaments on n vertices (pair i<j in
/// lexicographic order is bit e of the index; set means i->j), keeps those
/// with kappa = k, and records extremal s and ss with the first witness in
/// enumeration order. n <= 6 always; n = 7 only with allow_n7.
ScanResult extremal_scan(int n, int k, const ScanOptions& options = {});

/// The tournament with the given enumeration index.
Digraph tournament_from_index(int n, std::uint64_t index);

}  // namespace safeset
