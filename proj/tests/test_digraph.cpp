#include <doctest.h>

#include "safeset/errors.hpp"
#include "support.hpp"

using namespace safeset;
using namespace safeset::testing;

TEST_SUITE("digraph") {

TEST_CASE("arcs are simple: self-loops rejected, parallel arcs collapse, digons kept") {
  Digraph d(3);
  CHECK_THROWS_AS(d.add_arc(1, 1), InputError);
  CHECK_THROWS_AS(d.add_arc(0, 3), InputError);
  CHECK(d.add_arc(0, 1));
  CHECK_FALSE(d.add_arc(0, 1));
  CHECK(d.add_arc(1, 0));
  CHECK(d.arc_count() == 2);
  CHECK(d.has_arc(1, 0));
  CHECK_FALSE(d.has_arc(0, 2));
}

TEST_CASE("scc_decompose on the worked example gives components of sizes 3,5,3,4 in order") {
  const Digraph d = figure1();
  const Condensation c = scc_decompose(d);
  REQUIRE(c.size() == 4);
  CHECK(c.components[0] == labelled(d, {"a1", "a2", "a3"}));
  CHECK(c.components[1] == labelled(d, {"b1", "b2", "b3", "b4", "b5"}));
  CHECK(c.components[2] == labelled(d, {"c1", "c2", "c3"}));
  CHECK(c.components[3] == labelled(d, {"d1", "d2", "d3", "d4"}));
}

TEST_CASE("scc_decompose trivial inputs") {
  CHECK(scc_decompose(Digraph(0)).size() == 0);
  const auto one = scc_decompose(Digraph(1));
  REQUIRE(one.size() == 1);
  CHECK(one.components[0] == VertexSet{0});

  FamilySpec spec;
  spec.n = 4;
  const auto t = scc_decompose(generate(spec));
  REQUIRE(t.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(t.components[i] == VertexSet{i});
}

TEST_CASE("scc order breaks ties by smallest vertex id") {
  Digraph d(4);
  d.add_arc(3, 1);
  d.add_arc(2, 0);
  const auto c = scc_decompose(d);
  REQUIRE(c.size() == 4);
  // 0 needs 2 first; 1 needs 3 first. Smallest available id each step: 2, 0, 3, 1.
  CHECK(c.components[0] == VertexSet{2});
  CHECK(c.components[1] == VertexSet{0});
  CHECK(c.components[2] == VertexSet{3});
  CHECK(c.components[3] == VertexSet{1});
}

TEST_CASE("condensation property: partition, strong parts, forward arcs") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Digraph d = random_digraph(n, 0.05 + 0.3 * uniform(rng), rng);
    const Condensation c = scc_decompose(d);
    std::vector<int> seen(n, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (Vertex v : c.components[i]) {
        ++seen[v];
        CHECK(c.comp_of[v] == static_cast<int>(i));
      }
      CHECK(classify(d.induced(c.components[i])).is_strong);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    for (auto [u, v] : d.arcs()) CHECK(c.comp_of[u] <= c.comp_of[v]);
    CHECK(scc_decompose(d).components == c.components);
  }
}

TEST_CASE("classify examples") {
  const auto c3 = classify(cycle(3));
  CHECK(c3.is_tournament);
  CHECK(c3.is_semicomplete);
  CHECK(c3.is_strong);
  CHECK(c3.is_oriented);
  CHECK_FALSE(c3.is_acyclic);

  const auto fig = classify(figure1());
  CHECK(fig.is_semicomplete);
  CHECK_FALSE(fig.is_tournament);
  CHECK_FALSE(fig.is_strong);

  const auto p3 = classify(path(3));
  CHECK(p3.is_acyclic);
  CHECK_FALSE(p3.is_semicomplete);
}

TEST_CASE("classify invariants on random inputs") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Digraph d = trial % 2 ? random_semicomplete(n, 0.3, rng) : random_digraph(n, 0.4, rng);
    const auto c = classify(d);
    if (c.is_tournament) CHECK(c.is_semicomplete);
    const auto comps = scc_decompose(d);
    CHECK(c.is_acyclic == (static_cast<int>(comps.size()) == n));
  }
}

TEST_CASE("vertex_connectivity examples") {
  FamilySpec tk;
  tk.family = Family::CirculantTk;
  tk.k = 3;
  CHECK(vertex_connectivity(generate(tk)) == 3);

  FamilySpec tr;
  tr.n = 5;
  CHECK(vertex_connectivity(generate(tr)) == 0);

  FamilySpec dag;
  dag.family = Family::TDagger;
  dag.kprime = 3;
  CHECK(vertex_connectivity(generate(dag)) == 3);

  CHECK(vertex_connectivity(Digraph(1)) == 0);
  CHECK(vertex_connectivity(cycle(5)) == 1);

  Digraph complete(5);
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (u != v) complete.add_arc(u, v);
  CHECK(vertex_connectivity(complete) == 4);
}

TEST_CASE("vertex_connectivity agrees with the exhaustive deletion oracle for n <= 10") {
  Rng rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Digraph d;
    switch (trial % 3) {
      case 0: d = random_tournament(n, rng); break;
      case 1: d = random_semicomplete(n, 0.4, rng); break;
      default: d = random_digraph(n, 0.3 + 0.5 * uniform(rng), rng); break;
    }
    INFO("trial " << trial << " n " << n);
    CHECK(vertex_connectivity(d) == exhaustive_connectivity(BitGraph(d)));
  }
}

TEST_CASE("oriented graphs have kappa at most floor((n-1)/2)") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Digraph t = random_tournament(n, rng);
    CHECK(vertex_connectivity(t) <= (n - 1) / 2);
  }
  for (int k = 1; k <= 4; ++k) {
    FamilySpec spec;
    spec.family = Family::CirculantTk;
    spec.k = k;
    const Digraph t = generate(spec);
    CHECK(vertex_connectivity(t) <= (t.order() - 1) / 2);
  }
}

TEST_CASE("independence_number examples") {
  Rng rng(1);
  CHECK(independence_number(random_tournament(8, rng)) == 1);
  CHECK(independence_number(Digraph(4)) == 4);
  const SetCoverGadget g = setcover_to_indominating({2, {{1}, {1, 2}}});
  CHECK(independence_number(g.digraph) == 3);
}

TEST_CASE("independence_number matches subset enumeration") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Digraph d = random_digraph(n, 0.25, rng);
    const BitGraph g(d);
    int best = 0;
    for_each_subset_by_size(n, 1, n, [&](Mask s) {
      for (Mask m = s; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if ((g.out(v) | g.in(v)) & s) return false;
      }
      best = std::max(best, popcount(s));
      return false;
    });
    CHECK(independence_number(d) == best);
  }
}

TEST_CASE("lsc examples") {
  CHECK(lsc(figure1()) == 5);
  Rng rng(3);
  CHECK(lsc(random_dag(9, 0.5, rng)) == 1);
  FamilySpec spec;
  spec.family = Family::TDagger;
  spec.kprime = 3;
  CHECK(lsc(generate(spec)) == 7);
}

TEST_CASE("induced subdigraph relabels in the given order") {
  const Digraph c = cycle(4);
  const std::vector<Vertex> keep{2, 3, 0};
  const Digraph sub = c.induced(keep);
  CHECK(sub.order() == 3);
  CHECK(sub.has_arc(0, 1));
  CHECK(sub.has_arc(1, 2));
  CHECK(sub.arc_count() == 2);
}

}  // TEST_SUITE
