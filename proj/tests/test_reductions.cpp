#include <doctest.h>

#include "safeset/errors.hpp"
#include "safeset/reductions.hpp"
#include "safeset/solvers.hpp"
#include "safeset/verify.hpp"
#include "support.hpp"

using namespace safeset;
using namespace safeset::testing;

TEST_SUITE("reductions") {

TEST_CASE("set cover gadget shape and examples") {
  const SetCoverGadget g = setcover_to_indominating({3, {{1, 2}, {2, 3}}});
  CHECK(g.digraph.order() == 2 + 3 + 1);
  CHECK(classify(g.digraph).is_acyclic);
  CHECK(g.digraph.has_arc(g.set_vertex(1), g.element_vertex(2)));
  CHECK(g.digraph.has_arc(g.element_vertex(3), g.sink()));
  CHECK(g.digraph.label(g.sink()) == "z");
  CHECK(g.map.size_offset == 1);
  CHECK(min_indominating(g.digraph).size == Size(2));
  CHECK(min_cover_brute({3, {{1, 2}, {2, 3}}}) == Cover{2});

  const SetCoverGadget single = setcover_to_indominating({1, {{1}}});
  const auto r = min_indominating(single.digraph);
  CHECK(r.size == Size(2));
  CHECK(r.set == VertexSet{single.set_vertex(1), single.sink()});
  CHECK(single.backward(r.set) == Cover{1});
}

TEST_CASE("set cover rejects empty sets and bad elements") {
  CHECK_THROWS_AS(setcover_to_indominating({2, {{1}, {}}}), InputError);
  CHECK_THROWS_AS(setcover_to_indominating({2, {{3}}}), InputError);
}

TEST_CASE("set cover equivalence and solution maps on random instances") {
  Rng rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    const SetCoverInstance inst = random_setcover(5, 6, rng);
    const SetCoverGadget g = setcover_to_indominating(inst);
    const Cover best = min_cover_brute(inst);
    const auto gamma = min_indominating(g.digraph);
    CHECK(gamma.size == Size(best.size() + 1));

    const VertexSet fwd = g.forward(best);
    CHECK(fwd.size() == best.size() + 1);
    CHECK(is_in_dominating(g.digraph, fwd).verdict);
    const Cover back = g.backward(gamma.set);
    CHECK(is_cover(inst, back));
    CHECK(back.size() + 1 <= gamma.size.value());
  }
}

TEST_CASE("make_irreducible examples") {
  CnfFormula one;
  one.num_vars = 3;
  one.clauses = {{1, 2, 3}};
  const auto r = make_irreducible(one);
  CHECK(r.formula.num_vars == 0);
  CHECK(r.formula.clauses.empty());
  const Assignment a = r.extend(Assignment(1, false));
  CHECK(satisfies(one, a));

  CnfFormula two;
  two.num_vars = 2;
  two.clauses = {{1, 2}, {-1, 2}};
  CHECK(make_irreducible(two).formula == two);

  CnfFormula empty;
  CHECK(make_irreducible(empty).formula == empty);
}

TEST_CASE("make_irreducible output is irreducible and equisatisfiable") {
  Rng rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const CnfFormula f = random_cnf(6, 6, rng);
    const auto r = make_irreducible(f);
    CHECK(is_irreducible(r.formula));
    const auto sat_in = brute_force_sat(f);
    const auto sat_out = brute_force_sat(r.formula);
    CHECK(sat_in.has_value() == sat_out.has_value());
    if (sat_out) CHECK(satisfies(f, r.extend(*sat_out)));
  }
}

TEST_CASE("traceable 4-SAT: sizes, hamiltonian path, equisatisfiability") {
  Rng rng(66);
  int checked = 0;
  while (checked < 150) {
    const CnfFormula f = make_irreducible(random_cnf(5, 7, rng)).formula;
    ++checked;
    const TraceableSat4 t = sat3_to_traceable_sat4(f);
    CHECK(t.normalized_vars % 2 == 0);
    CHECK(t.normalized_clauses % 2 == 0);
    CHECK(t.normalized_clauses > t.normalized_vars + 1);
    CHECK(t.formula.num_vars == t.normalized_vars + 1);
    CHECK(static_cast<int>(t.formula.clauses.size()) == 2 * t.normalized_clauses);
    CHECK_NOTHROW(t.formula.validate());
    const auto inc = incidence_structures(t.formula);
    CHECK(is_hamiltonian_path(inc.g, t.path));
    CHECK(t.path.front() < inc.clauses);
    CHECK(t.path.back() < inc.clauses);
    // Output clauses are numbered in path order.
    int expected = 0;
    for (int v : t.path)
      if (v < inc.clauses) CHECK(v == expected++);

    const auto sat_in = brute_force_sat(f);
    const auto sat_out = brute_force_sat(t.formula);
    CHECK(sat_in.has_value() == sat_out.has_value());
    if (sat_in) CHECK(satisfies(t.formula, t.forward(*sat_in)));
    if (sat_out) CHECK(satisfies(f, t.backward(*sat_out)));
  }
}

TEST_CASE("traceable 4-SAT rejects reducible input") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{1, 2, 3}};
  CHECK_THROWS_AS(sat3_to_traceable_sat4(f), PreconditionError);
}

TEST_CASE("B(F) is a subgraph of G(F)") {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inc = incidence_structures(random_cnf(5, 6, rng));
    for (std::size_t v = 0; v < inc.b.size(); ++v)
      for (int w : inc.b[v]) CHECK(std::binary_search(inc.g[v].begin(), inc.g[v].end(), w));
  }
}

TEST_CASE("traceable DAG: shape, path, and both solution maps") {
  Rng rng(88);
  for (int trial = 0; trial < 40; ++trial) {
    const CnfFormula f = make_irreducible(random_cnf(3, 5, rng)).formula;
    const TraceableSat4 t = sat3_to_traceable_sat4(f);
    const TraceableDagGadget g = traceable_sat4_to_dag(t.formula, t.path);
    const int m = static_cast<int>(t.formula.clauses.size());
    const int n = t.formula.num_vars;
    CHECK(g.digraph.order() == m + 3 * n + 1);
    CHECK(g.k == n + 1);
    CHECK(classify(g.digraph).is_acyclic);
    CHECK(is_hamiltonian_path(g.digraph, g.hamiltonian_path));
    CHECK(g.hamiltonian_path.back() == g.sink());

    const auto sat = brute_force_sat(t.formula);
    const auto capped = min_indominating(g.digraph, g.k);
    CHECK(sat.has_value() == capped.size.feasible());
    if (sat) {
      CHECK(capped.size == Size(g.k));
      const VertexSet z = g.forward(*sat);
      CHECK(z.size() == static_cast<std::size_t>(g.k));
      CHECK(is_in_dominating(g.digraph, z).verdict);
      const VertexSet normal = g.normalize_dominating_set(capped.set);
      CHECK(normal.size() <= capped.set.size());
      CHECK(is_in_dominating(g.digraph, normal).verdict);
      CHECK(satisfies(t.formula, g.backward(capped.set)));
    }
  }
}

TEST_CASE("traceable DAG input validation") {
  CnfFormula f;
  f.num_vars = 2;
  f.max_clause_width = 4;
  f.clauses = {{1, 2}, {-1, 2}};
  // G(F): clauses 0,1 share literal 2; variables are vertices 2 (x1), 3 (x2).
  CHECK_THROWS_AS(traceable_sat4_to_dag(f, {0, 1, 2, 3}), InputError);
  CHECK_THROWS_AS(traceable_sat4_to_dag(f, {2, 0, 3, 1}), InputError);
  f.clauses.push_back({2});
  // Now clauses are 0..2, x1 is vertex 3, x2 is vertex 4.
  const auto g = traceable_sat4_to_dag(f, {0, 3, 1, 4, 2});
  CHECK(g.k == 3);
  CHECK(g.digraph.order() == 3 + 6 + 1);
}

TEST_CASE("fvs gadget examples and equivalence") {
  const FvsGadget c3 = fvs_to_safeset(cycle(3));
  CHECK(c3.tournament.order() == 4);
  CHECK(classify(c3.tournament).is_tournament);
  CHECK(min_safe_set(c3.tournament, {Method::Brute}).size == Size(2));
  CHECK(min_feedback_vertex_set(cycle(3)).size == Size(1));

  FamilySpec spec;
  spec.n = 5;
  const FvsGadget tr = fvs_to_safeset(generate(spec));
  const auto s = min_safe_set(tr.tournament, {Method::Brute});
  CHECK(s.size == Size(1));
  CHECK(s.set == VertexSet{tr.sink});

  CHECK_THROWS_AS(fvs_to_safeset(path(3)), InputError);

  Rng rng(909);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph t = random_tournament(1 + static_cast<int>(rng() % 8), rng);
    const FvsGadget g = fvs_to_safeset(t);
    const auto fvs = min_feedback_vertex_set(t);
    const auto safe = min_safe_set(g.tournament, {Method::Brute});
    CHECK(safe.size == Size(fvs.size.value() + 1));
    CHECK(is_safe_set(g.tournament, g.forward(fvs.set)).verdict);
    const VertexSet back = g.backward(safe.set);
    std::vector<char> keep(t.order(), 1);
    for (Vertex v : back) keep[v] = 0;
    VertexSet rest;
    for (Vertex v = 0; v < t.order(); ++v)
      if (keep[v]) rest.push_back(v);
    CHECK(classify(t.induced(rest)).is_acyclic);
  }
}

}  // TEST_SUITE
