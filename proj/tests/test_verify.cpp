#include <doctest.h>

#include "safeset/errors.hpp"
#include "safeset/verify.hpp"
#include "support.hpp"

using namespace safeset;
using namespace safeset::testing;

TEST_SUITE("verify") {

TEST_CASE("worked example: the printed optimum is safe") {
  const Digraph d = figure1();
  const auto cert = is_safe_set(d, labelled(d, {"a1", "b1", "c2", "d3", "d4"}));
  CHECK(cert.verdict);
  CHECK(cert.violations.empty());
}

TEST_CASE("3-cycle with a single vertex fails condition (i)") {
  const auto cert = is_safe_set(cycle(3), {0});
  CHECK_FALSE(cert.verdict);
  REQUIRE(cert.violations.size() == 1);
  CHECK(cert.violations[0].kind == ViolationKind::NoArcIntoSet);
  CHECK(cert.violations[0].outside == VertexSet{1});
}

TEST_CASE("condition (ii) names the arc and both components") {
  // a -> b with D-S = {a,c} forming a digon, S = {b}: M has size 2 > |N| = 1.
  Digraph d(3);
  d.add_arc(0, 2);
  d.add_arc(2, 0);
  d.add_arc(0, 1);
  const auto cert = is_safe_set(d, {1});
  CHECK_FALSE(cert.verdict);
  REQUIRE(cert.violations.size() == 1);
  const auto& v = cert.violations[0];
  CHECK(v.kind == ViolationKind::ArcIntoSmallerComponent);
  CHECK(v.outside == VertexSet{0, 2});
  CHECK(v.inside == VertexSet{1});
  CHECK(v.arc_tail == 0);
  CHECK(v.arc_head == 1);
}

TEST_CASE("all violations are listed") {
  // Two isolated vertices and S = {2}: both components of D-S fail (i).
  const auto cert = is_safe_set(Digraph(3), {2});
  CHECK(cert.violations.size() == 2);
}

TEST_CASE("sink of a transitive tournament is safe and strong safe") {
  FamilySpec spec;
  spec.n = 6;
  const Digraph t = generate(spec);
  CHECK(is_safe_set(t, {5}).verdict);
  CHECK(is_strong_safe_set(t, {5}).verdict);
}

TEST_CASE("empty set is rejected with its own reason; V(D) is always safe") {
  const auto cert = is_safe_set(cycle(3), {});
  CHECK_FALSE(cert.verdict);
  REQUIRE(cert.violations.size() == 1);
  CHECK(cert.violations[0].kind == ViolationKind::EmptySet);

  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph d = random_digraph(1 + static_cast<int>(rng() % 8), 0.3, rng);
    VertexSet all(d.order());
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_safe_set(d, all).verdict);
  }
}

TEST_CASE("out-of-range ids are input errors") {
  CHECK_THROWS_AS(is_safe_set(cycle(3), {3}), InputError);
  CHECK_THROWS_AS(is_in_dominating(cycle(3), {-1}), InputError);
}

TEST_CASE("strong safe set examples") {
  FamilySpec spec;
  spec.family = Family::CirculantTk;
  spec.k = 3;
  const Digraph t = generate(spec);
  CHECK(is_strong_safe_set(t, {1, 2, 4}).verdict);

  const auto cert = is_strong_safe_set(cycle(3), {0, 1});
  CHECK_FALSE(cert.verdict);
  const bool not_strong = std::any_of(cert.violations.begin(), cert.violations.end(), [](const Violation& v) {
    return v.kind == ViolationKind::InducedNotStrong;
  });
  CHECK(not_strong);
  CHECK(is_strong_safe_set(cycle(5), {0, 1, 2, 3, 4}).verdict);
}

TEST_CASE("in-dominating examples") {
  const Digraph p = path(3);
  const auto cert = is_in_dominating(p, {2});
  CHECK_FALSE(cert.verdict);
  REQUIRE(cert.violations.size() == 1);
  CHECK(cert.violations[0].kind == ViolationKind::Undominated);
  CHECK(cert.violations[0].outside == VertexSet{0});
  CHECK(is_in_dominating(p, {0, 2}).verdict);
  CHECK(is_in_dominating(p, {0, 1, 2}).verdict);
  CHECK(is_in_dominating(Digraph(0), {}).verdict);
  CHECK_FALSE(is_in_dominating(Digraph(1), {}).verdict);
}

TEST_CASE("verdict is true iff there are no violations, and matches the bit-parallel test") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Digraph d = trial % 2 ? random_semicomplete(n, 0.3, rng) : random_digraph(n, 0.35, rng);
    const BitGraph g(d);
    const Mask s = rng() & g.all();
    const VertexSet set = mask_to_set(s);
    const auto safe = is_safe_set(d, set);
    CHECK(safe.verdict == safe.violations.empty());
    CHECK(safe.verdict == g.is_safe_set(s));
    const auto dom = is_in_dominating(d, set);
    CHECK(dom.verdict == g.is_in_dominating(s));
    if (is_strong_safe_set(d, set).verdict) CHECK(safe.verdict);
  }
}

TEST_CASE("safe sets and in-dominating sets coincide on acyclic digraphs") {
  Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Digraph d = random_dag(n, uniform(rng), rng);
    const Mask s = (rng() & BitGraph(d).all()) | (Mask{1} << (rng() % n));
    const VertexSet set = mask_to_set(s);
    CHECK(is_safe_set(d, set).verdict == is_in_dominating(d, set).verdict);
  }
}

TEST_CASE("verdicts are invariant under relabeling") {
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Digraph d = random_digraph(n, 0.35, rng);
    const auto perm = random_permutation(n, rng);
    const Digraph pd = permute(d, perm);
    const VertexSet set = mask_to_set(rng() & BitGraph(d).all());
    VertexSet mapped;
    for (Vertex v : set) mapped.push_back(perm[v]);
    mapped = normalize(mapped);
    CHECK(is_safe_set(d, set).verdict == is_safe_set(pd, mapped).verdict);
    CHECK(is_strong_safe_set(d, set).verdict == is_strong_safe_set(pd, mapped).verdict);
    CHECK(is_in_dominating(d, set).verdict == is_in_dominating(pd, mapped).verdict);
  }
}

}  // TEST_SUITE
