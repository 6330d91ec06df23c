#pragma once

#include <string>
#include <vector>

#include "safeset/digraph.hpp"

namespace safeset {

enum class ViolationKind {
  /// S (or X) is empty.
  EmptySet,
  /// Condition (i): component M of D-S has no arc into S.
  NoArcIntoSet,
  /// Condition (ii): arc from component M of D-S into a smaller component N
  /// of D[S].
  ArcIntoSmallerComponent,
  /// D[S] is not strongly connected (strong safe sets only).
  InducedNotStrong,
  /// Vertex outside X with no out-arc into X (in-dominating sets only).
  Undominated,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Component of D-S (conditions i/ii) or the undominated vertex.
  VertexSet outside;
  /// Component of D[S] for condition (ii); strong components of D[S] are
  /// not listed for InducedNotStrong, see `inside_components`.
  VertexSet inside;
  /// Witnessing arc M->N for condition (ii).
  Vertex arc_tail = -1;
  Vertex arc_head = -1;
  /// Number of strong components of D[S] for InducedNotStrong.
  int inside_components = 0;
};

struct SafeSetCertificate {
  bool verdict = false;
  std::vector<Violation> violations;
};

/// Every violation is listed, not just the first. Throws InputError for an
/// out-of-range vertex id; duplicates in S are ignored.
SafeSetCertificate is_safe_set(const Digraph& d, const VertexSet& s);
SafeSetCertificate is_strong_safe_set(const Digraph& d, const VertexSet& s);
SafeSetCertificate is_in_dominating(const Digraph& d, const VertexSet& x);

}  // namespace safeset
