#include "safeset/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "safeset/errors.hpp"

namespace safeset {

void CnfFormula::validate() const {
  if (num_vars < 0) throw InputError("negative variable count");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& c = clauses[j];
    if (c.empty()) throw InputError("clause " + std::to_string(j + 1) + " is empty");
    if (static_cast<int>(c.size()) > max_clause_width)
      throw InputError("clause " + std::to_string(j + 1) + " is wider than " +
                       std::to_string(max_clause_width));
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > num_vars)
        throw InputError("clause " + std::to_string(j + 1) + " has literal " +
                         std::to_string(lit) + " outside 1.." + std::to_string(num_vars));
  }
}

bool satisfies(const CnfFormula& f, const Assignment& assignment) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = assignment.at(std::abs(lit));
      if (lit > 0 ? value : !value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
  if (f.num_vars > 24) throw RefusedError("brute-force SAT limited to 24 variables");
  Assignment a(f.num_vars + 1, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits) {
    for (int i = 1; i <= f.num_vars; ++i) a[i] = (bits >> (i - 1)) & 1U;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

IncidenceStructures incidence_structures(const CnfFormula& f) {
  IncidenceStructures s;
  s.clauses = static_cast<int>(f.clauses.size());
  s.variables = f.num_vars;
  const int total = s.clauses + s.variables;
  std::vector<std::set<int>> g(total), b(total);
  for (int j = 0; j < s.clauses; ++j) {
    for (int lit : f.clauses[j]) {
      const int v = s.variable_vertex(std::abs(lit));
      g[j].insert(v);
      g[v].insert(j);
      b[j].insert(v);
      b[v].insert(j);
    }
    for (int other = j + 1; other < s.clauses; ++other) {
      const auto& a = f.clauses[j];
      const auto& c = f.clauses[other];
      const bool share = std::any_of(a.begin(), a.end(), [&](int lit) {
        return std::find(c.begin(), c.end(), lit) != c.end();
      });
      if (share) {
        g[j].insert(other);
        g[other].insert(j);
      }
    }
  }
  s.g.resize(total);
  s.b.resize(total);
  for (int v = 0; v < total; ++v) {
    s.g[v].assign(g[v].begin(), g[v].end());
    s.b[v].assign(b[v].begin(), b[v].end());
  }
  const auto matching = max_variable_matching(f);
  if (std::none_of(matching.begin(), matching.end(), [](int c) { return c < 0; }))
    s.matching = matching;
  return s;
}

namespace {

// Kuhn's augmenting paths from the variable side.
class VariableMatcher {
 public:
  explicit VariableMatcher(const CnfFormula& f)
      : clauses_of_(f.num_vars), var_of_clause_(f.clauses.size(), -1),
        clause_of_var_(f.num_vars, -1) {
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
      for (int lit : f.clauses[j]) clauses_of_[std::abs(lit) - 1].push_back(static_cast<int>(j));
    for (auto& list : clauses_of_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  std::vector<int> run() {
    for (int v = 0; v < static_cast<int>(clauses_of_.size()); ++v) {
      visited_.assign(var_of_clause_.size(), 0);
      augment(v);
    }
    return clause_of_var_;
  }

 private:
  bool augment(int v) {
    for (int c : clauses_of_[v]) {
      if (visited_[c]) continue;
      visited_[c] = 1;
      if (var_of_clause_[c] == -1 || augment(var_of_clause_[c])) {
        var_of_clause_[c] = v;
        clause_of_var_[v] = c;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> clauses_of_;
  std::vector<int> var_of_clause_;
  std::vector<int> clause_of_var_;
  std::vector<char> visited_;
};

}  // namespace

std::vector<int> max_variable_matching(const CnfFormula& f) { return VariableMatcher(f).run(); }

bool is_irreducible(const CnfFormula& f) {
  const auto m = max_variable_matching(f);
  return std::none_of(m.begin(), m.end(), [](int c) { return c < 0; });
}

bool is_hamiltonian_path(const AdjacencyList& g, const std::vector<int>& path) {
  const int n = static_cast<int>(g.size());
  if (static_cast<int>(path.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int v = path[i];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
    if (i > 0) {
      const auto& adj = g[path[i - 1]];
      if (!std::binary_search(adj.begin(), adj.end(), v)) return false;
    }
  }
  return true;
}

bool is_hamiltonian_path(const Digraph& d, const std::vector<Vertex>& path) {
  const int n = d.order();
  if (static_cast<int>(path.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !d.has_arc(path[i - 1], v)) return false;
  }
  return true;
}

}  // namespace safeset
