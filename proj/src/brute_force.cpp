#include <chrono>
#include <stdexcept>

#include "safeset/bit_graph.hpp"
#include "safeset/errors.hpp"
#include "safeset/solvers.hpp"
#include "safeset/verify.hpp"

namespace safeset {

std::string to_string(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::Dp: return "dp";
    case Method::Auto: return "auto";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "brute") return Method::Brute;
  if (name == "dp") return Method::Dp;
  if (name == "auto") return Method::Auto;
  throw InputError("unknown method '" + name + "' (expected brute, dp or auto)");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

VertexSet to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

void require_brute_size(const Digraph& d, const char* what) {
  if (d.order() > kBruteForceMaxOrder)
    throw RefusedError(std::string(what) + ": brute force refused for " +
                       std::to_string(d.order()) + " vertices (limit " +
                       std::to_string(kBruteForceMaxOrder) + ")");
}

void require_order(const Digraph& d) {
  if (d.order() < 1) throw PreconditionError("digraph must have at least one vertex");
}

template <class Pred>
SolveResult first_by_size(const BitGraph& g, int min_size, int max_size, Pred&& accept) {
  SolveResult result;
  result.method = Method::Brute;
  Mask found = 0;
  bool ok = for_each_subset_by_size(g.order(), min_size, max_size, [&](Mask m) {
    ++result.stats.subsets_examined;
    if (accept(m)) {
      found = m;
      return true;
    }
    return false;
  });
  if (ok) {
    result.set = to_set(found);
    result.size = Size(result.set.size());
  }
  return result;
}

void self_check(const SafeSetCertificate& cert, const char* what) {
  if (!cert.verdict) throw std::logic_error(std::string(what) + ": returned set failed verification");
}

SolveResult brute_safe_set(const Digraph& d) {
  require_brute_size(d, "min_safe_set");
  const BitGraph g(d);
  return first_by_size(g, 1, g.order(), [&](Mask m) { return g.is_safe_set(m); });
}

SolveResult dp_safe_set(const Digraph& d, int threads) {
  DpTable table = dp_tables(d, threads);
  SolveResult result;
  result.method = Method::Dp;
  result.stats.subsets_examined = table.subsets_examined;
  // Ties resolve to the smallest b.
  for (const DpCell& cell : table.rows.front())
    if (cell.size < result.size) {
      result.size = cell.size;
      result.set = cell.set;
    }
  return result;
}

// Combinations of {0..n-1} of size k in colex order, which is the order of
// increasing bitmask value.
template <class Fn>
bool for_each_combination_colex(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (fn(c)) return true;
    int i = 0;
    while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : n)) ++i;
    if (i == k) return false;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
}

}  // namespace

SolveResult min_safe_set(const Digraph& d, const SolveOptions& options) {
  require_order(d);
  const auto start = Clock::now();
  Method method = options.method;
  const bool semicomplete = classify(d).is_semicomplete;
  if (method == Method::Auto) method = semicomplete ? Method::Dp : Method::Brute;
  if (method == Method::Dp && !semicomplete)
    throw PreconditionError("dynamic program requires a semicomplete digraph");

  SolveResult result = method == Method::Dp ? dp_safe_set(d, options.threads) : brute_safe_set(d);
  result.stats.elapsed_seconds = seconds_since(start);
  self_check(is_safe_set(d, result.set), "min_safe_set");
  return result;
}

SolveResult min_strong_safe_set(const Digraph& d) {
  require_order(d);
  require_brute_size(d, "min_strong_safe_set");
  const auto start = Clock::now();
  const BitGraph g(d);
  SolveResult result = first_by_size(g, 1, g.order(),
                                     [&](Mask m) { return g.is_strong(m) && g.is_safe_set(m); });
  result.stats.elapsed_seconds = seconds_since(start);
  if (result.size.feasible()) self_check(is_strong_safe_set(d, result.set), "min_strong_safe_set");
  return result;
}

SolveResult min_indominating(const Digraph& d, std::optional<int> alpha_cap) {
  require_order(d);
  const auto start = Clock::now();
  const int n = d.order();
  int cap = n;
  if (alpha_cap) {
    if (*alpha_cap < 1) throw InputError("alpha cap must be positive");
    cap = std::min(*alpha_cap, n);
  } else if (classify(d).is_acyclic) {
    cap = independence_number(d);
  } else {
    require_brute_size(d, "min_indominating");
  }

  SolveResult result;
  if (n <= BitGraph::kMaxOrder) {
    const BitGraph g(d);
    result = first_by_size(g, 1, cap, [&](Mask m) { return g.is_in_dominating(m); });
  } else {
    std::vector<char> chosen(n, 0);
    for (int k = 1; k <= cap && !result.size.feasible(); ++k) {
      for_each_combination_colex(n, k, [&](const std::vector<int>& c) {
        ++result.stats.subsets_examined;
        for (int v : c) chosen[v] = 1;
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
          if (chosen[v]) continue;
          bool dominated = false;
          for (Vertex w : d.out_neighbors(v))
            if (chosen[w]) {
              dominated = true;
              break;
            }
          ok = dominated;
        }
        for (int v : c) chosen[v] = 0;
        if (ok) {
          result.set.assign(c.begin(), c.end());
          result.size = Size(result.set.size());
        }
        return ok;
      });
    }
  }
  result.method = Method::Brute;
  result.stats.elapsed_seconds = seconds_since(start);
  if (result.size.feasible()) self_check(is_in_dominating(d, result.set), "min_indominating");
  return result;
}

SolveResult min_feedback_vertex_set(const Digraph& d) {
  require_brute_size(d, "min_feedback_vertex_set");
  const auto start = Clock::now();
  const BitGraph g(d);
  SolveResult result =
      first_by_size(g, 0, g.order(), [&](Mask m) { return g.is_acyclic(g.all() & ~m); });
  result.stats.elapsed_seconds = seconds_since(start);
  // Independent check: the remainder has only singleton strong components.
  std::vector<char> rest(d.order(), 1);
  for (Vertex v : result.set) rest[v] = 0;
  const auto comps = induced_components(d, rest);
  for (int s : comps.sizes)
    if (s != 1) throw std::logic_error("min_feedback_vertex_set: remainder is not acyclic");
  return result;
}

}  // namespace safeset
