#include <algorithm>
#include <limits>
#include <thread>

#include "safeset/bit_graph.hpp"
#include "safeset/errors.hpp"
#include "safeset/solvers.hpp"

namespace safeset {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

// Best candidate seen for one cell of the row under construction. Candidates
// are compared by size only; the first one in enumeration order wins ties.
struct Candidate {
  std::size_t size = std::numeric_limits<std::size_t>::max();
  Mask own = 0;
  int next_b = 0;

  bool present() const { return size != std::numeric_limits<std::size_t>::max(); }
};

struct SubsetProfile {
  bool admissible = false;
  int smallest_inside = kInfinity;  // s_W, +inf for W = {}
  int largest_outside = 0;          // t_W, 0 for W = C
};

// Checks one W inside a single component. Always enforces that no component
// of C-W has an arc into a smaller component of D[W]; for the last component
// additionally every component of C-W must have an arc into W.
SubsetProfile profile(const BitGraph& g, Mask w, bool last) {
  SubsetProfile result;
  MaskComponents inside, outside;
  g.components(w, inside);
  g.components(g.all() & ~w, outside);
  for (Mask n : inside.view()) result.smallest_inside = std::min(result.smallest_inside, popcount(n));
  for (Mask m : outside.view()) {
    const int size = popcount(m);
    result.largest_outside = std::max(result.largest_outside, size);
    const Mask reach = g.out_union(m);
    if (last && !(reach & w)) return result;
    for (Mask n : inside.view())
      if ((reach & n) && size > popcount(n)) return result;
  }
  result.admissible = true;
  return result;
}

struct RowWork {
  const BitGraph* graph;
  const std::vector<Mask>* order;
  const std::vector<DpCell>* next_row;  // nullptr for the last component
  int lsc;
};

std::vector<Candidate> scan_range(const RowWork& work, std::size_t begin, std::size_t end) {
  std::vector<Candidate> best(work.lsc + 1);
  const bool last = work.next_row == nullptr;
  for (std::size_t idx = begin; idx < end; ++idx) {
    const Mask w = (*work.order)[idx];
    if (last && w == 0) continue;
    const SubsetProfile pr = profile(*work.graph, w, last);
    if (!pr.admissible) continue;
    const std::size_t own = static_cast<std::size_t>(popcount(w));
    if (last) {
      Candidate& c = best[pr.smallest_inside];
      if (own < c.size) c = {own, w, 0};
      continue;
    }
    for (int j = std::max(pr.largest_outside, 1); j <= work.lsc; ++j) {
      const DpCell& tail = (*work.next_row)[j - 1];
      if (!tail.size.feasible()) continue;
      const int b = std::min(j, pr.smallest_inside);
      const std::size_t total = own + tail.size.value();
      Candidate& c = best[b];
      if (total < c.size) c = {total, w, j};
    }
  }
  return best;
}

}  // namespace

DpTable dp_tables(const Digraph& d, int threads) {
  if (d.order() < 1) throw PreconditionError("digraph must have at least one vertex");
  if (!classify(d).is_semicomplete)
    throw PreconditionError("dynamic program requires a semicomplete digraph");

  DpTable table;
  table.condensation = scc_decompose(d);
  table.p = static_cast<int>(table.condensation.size());
  for (const auto& c : table.condensation.components)
    table.lsc = std::max(table.lsc, static_cast<int>(c.size()));
  if (table.lsc > kDpMaxComponent)
    throw RefusedError("largest strong component has " + std::to_string(table.lsc) +
                       " vertices; the dynamic program accepts at most " +
                       std::to_string(kDpMaxComponent));
  table.rows.assign(table.p, std::vector<DpCell>(table.lsc));
  threads = std::max(threads, 1);

  std::vector<Mask> order;
  int order_width = -1;
  for (int a = table.p; a >= 1; --a) {
    const VertexSet& component = table.condensation.components[a - 1];
    const int width = static_cast<int>(component.size());
    if (width != order_width) {
      order.clear();
      for_each_subset_by_size(width, 0, width, [&](Mask m) {
        order.push_back(m);
        return false;
      });
      order_width = width;
    }
    const BitGraph g(d, component);
    const RowWork work{&g, &order, a == table.p ? nullptr : &table.rows[a], table.lsc};

    // Contiguous chunks merged in chunk order reproduce the sequential scan.
    const std::size_t chunk_count =
        order.size() >= 4096 ? std::min<std::size_t>(threads, order.size()) : 1;
    std::vector<std::vector<Candidate>> partial(chunk_count);
    if (chunk_count == 1) {
      partial[0] = scan_range(work, 0, order.size());
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < chunk_count; ++t) {
        const std::size_t begin = order.size() * t / chunk_count;
        const std::size_t end = order.size() * (t + 1) / chunk_count;
        pool.emplace_back([&, t, begin, end] { partial[t] = scan_range(work, begin, end); });
      }
      for (auto& th : pool) th.join();
    }
    std::vector<Candidate> best(table.lsc + 1);
    for (const auto& part : partial)
      for (int b = 1; b <= table.lsc; ++b)
        if (part[b].size < best[b].size) best[b] = part[b];

    table.subsets_examined += order.size();
    for (int b = 1; b <= table.lsc; ++b) {
      const Candidate& c = best[b];
      if (!c.present()) continue;
      DpCell& cell = table.rows[a - 1][b - 1];
      cell.size = Size(c.size);
      for (Mask m = c.own; m; m &= m - 1) cell.own.push_back(component[std::countr_zero(m)]);
      cell.own = normalize(std::move(cell.own));
      cell.next_b = c.next_b;
      cell.set = cell.own;
      if (c.next_b > 0) {
        const auto& tail = table.rows[a][c.next_b - 1].set;
        cell.set.insert(cell.set.end(), tail.begin(), tail.end());
        cell.set = normalize(std::move(cell.set));
      }
    }
  }
  return table;
}

}  // namespace safeset
