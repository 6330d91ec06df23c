#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "safeset/digraph.hpp"

namespace safeset {

enum class Family {
  Transitive,
  CirculantTk,
  ExtendedTk,
  TPrime,
  TTriplePrime,
  TDagger,
  TStar,
  TStarStar,
  RandomTournament,
  RandomSemicomplete,
};

std::string to_string(Family f);
Family parse_family(const std::string& name);

struct FamilySpec {
  Family family = Family::Transitive;
  std::optional<int> k;
  std::optional<int> kprime;
  std::optional<int> n;
  std::uint64_t seed = 0;
  double digon_prob = 0.25;
};

/// Builds the requested family member. Vertex ids and labels:
///  - circulant_Tk, Tdag: v0..v_{2k} (ids 0..2k);
///  - extended_Tk: v0..v_{2k} then u1..u_{n-2k-1};
///  - Tprime, Ttripleprime: v1..vn with v_i -> id i-1;
///  - Tstar: Tdag(k') on ids 0..2k' plus v* = 2k'+1, k' = (n-2)/2;
///  - Tstarstar: Tstar on ids 0..2k'+1 plus v** = 2k'+2, k' = (n-3)/2.
/// Throws ParameterError naming the violated constraint.
Digraph generate(const FamilySpec& spec);

/// All seeded families draw from std::mt19937_64 seeded with `seed`. Pairs
/// (i, j), i < j, are visited in lexicographic order; one 64-bit draw per
/// pair orients it i->j when the top bit is set. Semicomplete digraphs then
/// take a second pass in the same pair order: draw u = (x >> 11) * 2^-53 and
/// add the missing reverse arc when u < digon_prob.
using Rng = std::mt19937_64;

Digraph random_tournament(int n, Rng& rng);
Digraph random_semicomplete(int n, double digon_prob, Rng& rng);

/// Disjoint union of the parts plus every arc from part i to part j, i < j.
/// Each part must be strong and semicomplete.
Digraph chain_components(const std::vector<Digraph>& parts);

/// Adds N - |T| vertices forming a transitive tournament, with every vertex
/// of T dominating all of them.
Digraph pad_with_transitive(const Digraph& t, int total);

}  // namespace safeset
