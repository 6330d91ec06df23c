#include "safeset/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>

#include "safeset/bit_graph.hpp"
#include "safeset/errors.hpp"

namespace safeset {

// ---------------------------------------------------------------- set cover

bool is_cover(const SetCoverInstance& inst, const Cover& z) {
  for (const auto& set : inst.sets) {
    const bool hit = std::any_of(set.begin(), set.end(), [&](int x) {
      return std::find(z.begin(), z.end(), x) != z.end();
    });
    if (!hit) return false;
  }
  return true;
}

Cover min_cover_brute(const SetCoverInstance& inst) {
  if (inst.ground_size > 24) throw RefusedError("brute-force set cover limited to 24 elements");
  std::vector<Mask> set_masks;
  for (const auto& set : inst.sets) {
    Mask m = 0;
    for (int x : set) m |= Mask{1} << (x - 1);
    set_masks.push_back(m);
  }
  Mask best = 0;
  const bool found = for_each_subset_by_size(inst.ground_size, 0, inst.ground_size, [&](Mask z) {
    for (Mask s : set_masks)
      if (!(s & z)) return false;
    best = z;
    return true;
  });
  if (!found) throw std::logic_error("set cover instance has no cover");
  Cover cover;
  for (Mask m = best; m; m &= m - 1) cover.push_back(std::countr_zero(m) + 1);
  return cover;
}

SetCoverGadget setcover_to_indominating(const SetCoverInstance& inst) {
  if (inst.ground_size < 0) throw InputError("negative ground set size");
  SetCoverGadget g;
  g.num_sets = static_cast<int>(inst.sets.size());
  g.ground_size = inst.ground_size;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    auto set = inst.sets[i];
    if (set.empty()) throw InputError("set S" + std::to_string(i + 1) + " is empty");
    for (int x : set)
      if (x < 1 || x > inst.ground_size)
        throw InputError("set S" + std::to_string(i + 1) + " has element " + std::to_string(x) +
                         " outside 1.." + std::to_string(inst.ground_size));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    g.sets.push_back(std::move(set));
  }

  g.digraph = Digraph(g.num_sets + g.ground_size + 1);
  g.map.source_problem = "set-cover";
  g.map.target_problem = "in-dominating-set";
  g.map.size_offset = 1;
  g.map.target_roles.resize(g.digraph.order());
  for (int i = 1; i <= g.num_sets; ++i) {
    g.map.target_roles[g.set_vertex(i)] = "s" + std::to_string(i);
    for (int x : g.sets[i - 1]) g.digraph.add_arc(g.set_vertex(i), g.element_vertex(x));
  }
  for (int j = 1; j <= g.ground_size; ++j) {
    g.map.target_roles[g.element_vertex(j)] = "v" + std::to_string(j);
    g.digraph.add_arc(g.element_vertex(j), g.sink());
    g.map.correspondences.push_back({"x" + std::to_string(j), {g.element_vertex(j)}});
  }
  g.map.target_roles[g.sink()] = "z";
  for (Vertex v = 0; v < g.digraph.order(); ++v) g.digraph.set_label(v, g.map.target_roles[v]);
  return g;
}

VertexSet SetCoverGadget::forward(const Cover& z) const {
  VertexSet x{sink()};
  for (int j : z) x.push_back(element_vertex(j));
  return normalize(std::move(x));
}

Cover SetCoverGadget::backward(const VertexSet& x) const {
  Cover z;
  for (Vertex v : x) {
    if (v < num_sets)
      z.push_back(sets[v].front());
    else if (v < sink())
      z.push_back(v - num_sets + 1);
  }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  return z;
}

// ------------------------------------------------------- irreducible 3-SAT

IrreducibleResult make_irreducible(const CnfFormula& f) {
  f.validate();
  IrreducibleResult result;
  result.formula = f;
  result.source_vars = f.num_vars;
  for (int i = 1; i <= f.num_vars; ++i) result.kept_variables.push_back(i);
  for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j) result.kept_clauses.push_back(j);

  for (;;) {
    const CnfFormula& cur = result.formula;
    const auto clause_of_var = max_variable_matching(cur);
    std::vector<int> var_of_clause(cur.clauses.size(), -1);
    for (int v = 0; v < cur.num_vars; ++v)
      if (clause_of_var[v] >= 0) var_of_clause[clause_of_var[v]] = v;

    std::vector<std::vector<int>> clauses_of(cur.num_vars);
    for (std::size_t j = 0; j < cur.clauses.size(); ++j)
      for (int lit : cur.clauses[j]) clauses_of[std::abs(lit) - 1].push_back(static_cast<int>(j));

    // Alternating search from unmatched variables: variable -> clause along
    // any edge, clause -> its matched variable.
    std::vector<char> in_u(cur.num_vars, 0), in_nu(cur.clauses.size(), 0);
    std::queue<int> queue;
    for (int v = 0; v < cur.num_vars; ++v)
      if (clause_of_var[v] < 0) {
        in_u[v] = 1;
        queue.push(v);
      }
    if (queue.empty()) break;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int c : clauses_of[v]) {
        if (in_nu[c]) continue;
        in_nu[c] = 1;
        const int mate = var_of_clause[c];
        if (mate < 0) throw std::logic_error("augmenting path left in a maximum matching");
        if (!in_u[mate]) {
          in_u[mate] = 1;
          queue.push(mate);
        }
      }
    }

    std::vector<int> new_index(cur.num_vars, 0);
    IrreducibleResult next;
    next.source_vars = result.source_vars;
    next.forced_literals = result.forced_literals;
    for (std::size_t j = 0; j < cur.clauses.size(); ++j) {
      if (!in_nu[j]) continue;
      const int mate = var_of_clause[j];
      for (int lit : cur.clauses[j])
        if (std::abs(lit) == mate + 1) {
          const int original = result.kept_variables[mate];
          next.forced_literals.push_back(lit > 0 ? original : -original);
          break;
        }
    }
    for (int v = 0; v < cur.num_vars; ++v)
      if (!in_u[v]) {
        next.kept_variables.push_back(result.kept_variables[v]);
        new_index[v] = static_cast<int>(next.kept_variables.size());
      }
    next.formula.num_vars = static_cast<int>(next.kept_variables.size());
    next.formula.max_clause_width = cur.max_clause_width;
    for (std::size_t j = 0; j < cur.clauses.size(); ++j) {
      if (in_nu[j]) continue;
      std::vector<int> clause;
      for (int lit : cur.clauses[j]) {
        const int idx = new_index[std::abs(lit) - 1];
        clause.push_back(lit > 0 ? idx : -idx);
      }
      next.formula.clauses.push_back(std::move(clause));
      next.kept_clauses.push_back(result.kept_clauses[j]);
    }
    result = std::move(next);
  }
  return result;
}

Assignment IrreducibleResult::extend(const Assignment& reduced) const {
  Assignment a(source_vars + 1, false);
  for (std::size_t i = 0; i < kept_variables.size(); ++i) a[kept_variables[i]] = reduced.at(i + 1);
  for (int lit : forced_literals) a[std::abs(lit)] = lit > 0;
  return a;
}

// ------------------------------------------------------- traceable 4-SAT

TraceableSat4 sat3_to_traceable_sat4(const CnfFormula& f) {
  f.validate();
  for (const auto& c : f.clauses)
    if (c.size() > 3) throw PreconditionError("input must be a 3-SAT instance");
  if (!is_irreducible(f))
    throw PreconditionError("input is not irreducible; run make_irreducible first");

  TraceableSat4 out;
  out.source_vars = f.num_vars;
  CnfFormula work = f;
  work.max_clause_width = 3;
  auto add_unit_variable = [&] {
    ++work.num_vars;
    work.clauses.push_back({work.num_vars});
  };
  if (work.clauses.empty()) add_unit_variable();
  if (work.num_vars % 2 == 1) add_unit_variable();
  if (work.clauses.size() % 2 == 1) work.clauses.push_back(work.clauses.back());
  while (static_cast<int>(work.clauses.size()) <= work.num_vars + 1) {
    work.clauses.push_back(work.clauses.back());
    work.clauses.push_back(work.clauses.back());
  }
  const int n = work.num_vars;
  const int m = static_cast<int>(work.clauses.size());
  out.normalized_vars = n;
  out.normalized_clauses = m;

  // Clause j (1-based) is matched to x_j for j <= n; the rest keep their order.
  const auto matching = max_variable_matching(work);
  std::vector<int> order;
  std::vector<char> used(m, 0);
  for (int v = 0; v < n; ++v) {
    if (matching[v] < 0) throw std::logic_error("normalization broke the variable matching");
    order.push_back(matching[v]);
    used[matching[v]] = 1;
  }
  for (int j = 0; j < m; ++j)
    if (!used[j]) order.push_back(j);

  // Walk: items are clause copies (j, copy) or variables, in path order.
  struct Item {
    int clause;  // 1-based position in `order`, 0 for a variable
    int copy;    // 1 = with x_{n+1}, 2 = with its negation
    int var;
  };
  std::vector<Item> walk;
  const int z = n + 1;
  for (int j = 1; j <= n; ++j) {
    const int first = j % 2 == 1 ? 1 : 2;
    walk.push_back({j, first, 0});
    walk.push_back({0, 0, j});
    walk.push_back({j, 3 - first, 0});
  }
  walk.push_back({n + 1, 1, 0});
  walk.push_back({0, 0, z});
  walk.push_back({n + 1, 2, 0});
  for (int j = n + 2; j <= m; ++j) {
    const int first = (j - n) % 2 == 0 ? 2 : 1;
    walk.push_back({j, first, 0});
    walk.push_back({j, 3 - first, 0});
  }

  out.formula.num_vars = z;
  out.formula.max_clause_width = 4;
  out.map.source_problem = "3-sat";
  out.map.target_problem = "traceable-4-sat";
  out.map.size_offset = 0;
  const int m_out = 2 * m;
  out.map.target_roles.resize(m_out + z);
  std::vector<std::vector<Vertex>> copies_of(m);
  for (const Item& item : walk) {
    if (item.clause == 0) continue;
    auto clause = work.clauses[order[item.clause - 1]];
    clause.push_back(item.copy == 1 ? z : -z);
    const int position = static_cast<int>(out.formula.clauses.size());
    out.formula.clauses.push_back(std::move(clause));
    out.map.target_roles[position] =
        "c" + std::to_string(item.clause) + "," + std::to_string(item.copy);
    copies_of[item.clause - 1].push_back(position);
  }
  for (int i = 1; i <= z; ++i) out.map.target_roles[m_out + i - 1] = "v" + std::to_string(i);
  for (int j = 1; j <= m; ++j) {
    const int original = order[j - 1];
    const std::string name = original < static_cast<int>(f.clauses.size())
                                 ? "C" + std::to_string(original + 1)
                                 : "padding" + std::to_string(original + 1);
    out.map.correspondences.push_back({name, copies_of[j - 1]});
  }

  int position = 0;
  for (const Item& item : walk)
    out.path.push_back(item.clause == 0 ? m_out + item.var - 1 : position++);

  const auto inc = incidence_structures(out.formula);
  if (!is_hamiltonian_path(inc.g, out.path))
    throw std::logic_error("constructed walk is not a hamiltonian path of G(F)");
  return out;
}

Assignment TraceableSat4::forward(const Assignment& source) const {
  Assignment a(formula.num_vars + 1, false);
  for (int i = 1; i <= source_vars; ++i) a[i] = source.at(i);
  // Padding variables only occur in their own unit clause.
  for (int i = source_vars + 1; i < formula.num_vars; ++i) a[i] = true;
  return a;
}

Assignment TraceableSat4::backward(const Assignment& target) const {
  Assignment a(source_vars + 1, false);
  for (int i = 1; i <= source_vars; ++i) a[i] = target.at(i);
  return a;
}

// ------------------------------------------------------ traceable DAG

TraceableDagGadget traceable_sat4_to_dag(const CnfFormula& f, const std::vector<int>& path) {
  f.validate();
  for (const auto& c : f.clauses)
    if (c.size() > 4) throw InputError("input must be a 4-SAT instance");
  if (f.clauses.empty()) throw InputError("formula has no clauses");
  const auto inc = incidence_structures(f);
  if (!is_hamiltonian_path(inc.g, path)) throw InputError("path is not a hamiltonian path of G(F)");
  const int m = inc.clauses;
  const int n = inc.variables;
  if (path.front() >= m || path.back() >= m)
    throw InputError("path must start and end at clause vertices");

  TraceableDagGadget g;
  g.clauses = m;
  g.variables = n;

  // Clauses are renumbered in path order, so c_1 and c_m are the endpoints.
  std::vector<int> clause_position(m, -1);
  int next = 0;
  for (int v : path)
    if (v < m) clause_position[v] = next++;

  // x_1 must occur positively in C_m: swap variables and flip polarity.
  const int last_literal = f.clauses[path.back()].front();
  const int r = std::abs(last_literal);
  g.variable_position.resize(n);
  g.variable_flipped.assign(n, false);
  for (int i = 1; i <= n; ++i) g.variable_position[i - 1] = i;
  std::swap(g.variable_position[0], g.variable_position[r - 1]);
  g.variable_flipped[r - 1] = last_literal < 0;

  auto literal_vertex = [&](int lit) {
    const int var = std::abs(lit);
    const bool positive = (lit > 0) != g.variable_flipped[var - 1];
    const int p = g.variable_position[var - 1];
    return positive ? g.positive_vertex(p) : g.negative_vertex(p);
  };

  Digraph& d = g.digraph;
  d = Digraph(m + 3 * n + 1);
  g.map.source_problem = "traceable-4-sat";
  g.map.target_problem = "in-dominating-set";
  g.map.size_offset = 0;
  g.map.target_roles.resize(d.order());
  for (int j = 1; j <= m; ++j) g.map.target_roles[g.clause_vertex(j)] = "c" + std::to_string(j);
  for (int i = 1; i <= n; ++i) {
    g.map.target_roles[g.variable_vertex(i)] = "v" + std::to_string(i);
    g.map.target_roles[g.positive_vertex(i)] = "w" + std::to_string(i);
    g.map.target_roles[g.negative_vertex(i)] = "~w" + std::to_string(i);
  }
  g.map.target_roles[g.sink()] = "u";
  for (Vertex v = 0; v < d.order(); ++v) d.set_label(v, g.map.target_roles[v]);

  for (int i = 1; i <= n; ++i) {
    d.add_arc(g.variable_vertex(i), g.positive_vertex(i));
    d.add_arc(g.variable_vertex(i), g.negative_vertex(i));
    d.add_arc(g.positive_vertex(i), g.sink());
    d.add_arc(g.negative_vertex(i), g.sink());
  }
  for (int c = 0; c < m; ++c)
    for (int lit : f.clauses[c]) d.add_arc(g.clause_vertex(clause_position[c] + 1), literal_vertex(lit));

  auto path_vertex = [&](int v) {
    return v < m ? g.clause_vertex(clause_position[v] + 1)
                 : g.variable_vertex(g.variable_position[v - m]);
  };
  for (int v : path) g.hamiltonian_path.push_back(path_vertex(v));
  for (std::size_t i = 1; i < path.size(); ++i)
    d.add_arc(g.hamiltonian_path[i - 1], g.hamiltonian_path[i]);
  for (int i = 1; i <= n; ++i) {
    g.hamiltonian_path.push_back(g.positive_vertex(i));
    g.hamiltonian_path.push_back(g.negative_vertex(i));
  }
  for (std::size_t i = path.size() + 1; i < g.hamiltonian_path.size(); ++i)
    d.add_arc(g.hamiltonian_path[i - 1], g.hamiltonian_path[i]);
  g.hamiltonian_path.push_back(g.sink());
  g.k = n + 1;

  for (int i = 1; i <= n; ++i) {
    const int p = g.variable_position[i - 1];
    g.map.correspondences.push_back(
        {"x" + std::to_string(i), {g.positive_vertex(p), g.negative_vertex(p)}});
  }
  if (!is_hamiltonian_path(d, g.hamiltonian_path) || !classify(d).is_acyclic)
    throw std::logic_error("gadget lost its hamiltonian path or acyclicity");
  return g;
}

VertexSet TraceableDagGadget::forward(const Assignment& phi) const {
  VertexSet z{sink()};
  for (int i = 1; i <= variables; ++i) {
    const int p = variable_position[i - 1];
    const bool value = phi.at(i) != variable_flipped[i - 1];
    z.push_back(value ? positive_vertex(p) : negative_vertex(p));
  }
  return normalize(std::move(z));
}

VertexSet TraceableDagGadget::normalize_dominating_set(const VertexSet& z) const {
  const int path_vertices = clauses + variables;
  std::vector<Vertex> predecessor(digraph.order(), -1);
  for (int i = 1; i < path_vertices; ++i) predecessor[hamiltonian_path[i]] = hamiltonian_path[i - 1];
  const Vertex first_literal = positive_vertex(1);

  VertexSet result = normalize(z);
  for (;;) {
    auto it = std::find_if(result.begin(), result.end(),
                           [&](Vertex v) { return v < path_vertices; });
    if (it == result.end()) break;
    const Vertex x = *it;
    const Vertex q = predecessor[x];
    Vertex replacement = -1;
    for (Vertex y : digraph.out_neighbors(x)) {
      if (y < first_literal || y == sink()) continue;
      if (q == -1 || digraph.has_arc(q, y)) {
        replacement = y;
        break;
      }
    }
    if (replacement == -1) throw std::logic_error("no shared literal vertex for exchange");
    result.erase(it);
    result.push_back(replacement);
    result = normalize(std::move(result));
  }
  return result;
}

Assignment TraceableDagGadget::backward(const VertexSet& z) const {
  const VertexSet literals = normalize_dominating_set(z);
  Assignment phi(variables + 1, false);
  for (int i = 1; i <= variables; ++i) {
    const int p = variable_position[i - 1];
    const bool value = std::binary_search(literals.begin(), literals.end(), positive_vertex(p));
    phi[i] = value != variable_flipped[i - 1];
  }
  return phi;
}

// -------------------------------------------------------------------- FVS

FvsGadget fvs_to_safeset(const Digraph& t) {
  if (!classify(t).is_tournament) throw InputError("feedback vertex set gadget needs a tournament");
  FvsGadget g;
  g.tournament = t;
  g.sink = g.tournament.add_vertex(t.has_labels() ? "x" : "");
  for (Vertex v = 0; v < g.sink; ++v) g.tournament.add_arc(v, g.sink);
  g.map.source_problem = "feedback-vertex-set";
  g.map.target_problem = "safe-set";
  g.map.size_offset = 1;
  for (Vertex v = 0; v < g.sink; ++v) {
    g.map.target_roles.push_back(t.label(v));
    g.map.correspondences.push_back({t.label(v), {v}});
  }
  g.map.target_roles.push_back("x");
  return g;
}

VertexSet FvsGadget::forward(const VertexSet& fvs) const {
  VertexSet s = fvs;
  s.push_back(sink);
  return normalize(std::move(s));
}

VertexSet FvsGadget::backward(const VertexSet& safe_set) const {
  VertexSet f;
  for (Vertex v : safe_set)
    if (v != sink) f.push_back(v);
  return normalize(std::move(f));
}

}  // namespace safeset
