#include "safeset/verify.hpp"

#include <map>

#include "safeset/errors.hpp"

namespace safeset {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptySet: return "empty_set";
    case ViolationKind::NoArcIntoSet: return "no_arc_into_set";
    case ViolationKind::ArcIntoSmallerComponent: return "arc_into_smaller_component";
    case ViolationKind::InducedNotStrong: return "induced_not_strong";
    case ViolationKind::Undominated: return "undominated";
  }
  return "unknown";
}

namespace {

std::vector<char> membership(const Digraph& d, const VertexSet& s) {
  std::vector<char> in(d.order(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= d.order())
      throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                       std::to_string(d.order()) + ")");
    in[v] = 1;
  }
  return in;
}

std::vector<VertexSet> members_by_component(const InducedComponents& comps) {
  std::vector<VertexSet> members(comps.sizes.size());
  for (Vertex v = 0; v < static_cast<Vertex>(comps.comp_of.size()); ++v)
    if (comps.comp_of[v] >= 0) members[comps.comp_of[v]].push_back(v);
  return members;
}

}  // namespace

SafeSetCertificate is_safe_set(const Digraph& d, const VertexSet& s) {
  const auto in = membership(d, s);
  SafeSetCertificate cert;
  bool any = false;
  for (char c : in) any = any || c;
  if (!any) {
    cert.violations.push_back({ViolationKind::EmptySet, {}, {}});
    return cert;
  }

  std::vector<char> out(d.order());
  for (Vertex v = 0; v < d.order(); ++v) out[v] = !in[v];
  const auto inside = induced_components(d, in);
  const auto outside = induced_components(d, out);
  const auto inside_members = members_by_component(inside);
  const auto outside_members = members_by_component(outside);

  // For every outside component: whether it reaches S, and the first arc
  // into each inside component.
  std::vector<char> reaches(outside.sizes.size(), 0);
  std::map<std::pair<int, int>, std::pair<Vertex, Vertex>> first_arc;
  for (Vertex u = 0; u < d.order(); ++u) {
    if (in[u]) continue;
    for (Vertex v : d.out_neighbors(u)) {
      if (!in[v]) continue;
      const int m = outside.comp_of[u];
      reaches[m] = 1;
      first_arc.try_emplace({m, inside.comp_of[v]}, u, v);
    }
  }

  for (std::size_t m = 0; m < outside_members.size(); ++m)
    if (!reaches[m])
      cert.violations.push_back({ViolationKind::NoArcIntoSet, outside_members[m], {}});
  for (const auto& [key, arc] : first_arc) {
    const auto [m, n] = key;
    if (outside.sizes[m] > inside.sizes[n])
      cert.violations.push_back({ViolationKind::ArcIntoSmallerComponent, outside_members[m],
                                 inside_members[n], arc.first, arc.second});
  }
  cert.verdict = cert.violations.empty();
  return cert;
}

SafeSetCertificate is_strong_safe_set(const Digraph& d, const VertexSet& s) {
  SafeSetCertificate cert = is_safe_set(d, s);
  if (!s.empty()) {
    const auto inside = induced_components(d, membership(d, s));
    if (inside.sizes.size() != 1) {
      Violation v{ViolationKind::InducedNotStrong, {}, normalize(s)};
      v.inside_components = static_cast<int>(inside.sizes.size());
      cert.violations.push_back(std::move(v));
    }
  }
  cert.verdict = cert.violations.empty();
  return cert;
}

SafeSetCertificate is_in_dominating(const Digraph& d, const VertexSet& x) {
  const auto in = membership(d, x);
  SafeSetCertificate cert;
  if (x.empty() && d.order() > 0) {
    cert.violations.push_back({ViolationKind::EmptySet, {}, {}});
    return cert;
  }
  for (Vertex v = 0; v < d.order(); ++v) {
    if (in[v]) continue;
    bool dominated = false;
    for (Vertex w : d.out_neighbors(v))
      if (in[w]) {
        dominated = true;
        break;
      }
    if (!dominated) cert.violations.push_back({ViolationKind::Undominated, {v}, {}});
  }
  cert.verdict = cert.violations.empty();
  return cert;
}

}  // namespace safeset
