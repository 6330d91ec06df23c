#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "safeset/digraph.hpp"
#include "safeset/reductions.hpp"
#include "safeset/size.hpp"
#include "safeset/solvers.hpp"
#include "safeset/verify.hpp"

namespace safeset {

using Json = nlohmann::ordered_json;

/// Shape of the input a command ran on.
struct InputSummary {
  int n = 0;
  std::size_t m = 0;
  Classification flags;

  friend bool operator==(const InputSummary& a, const InputSummary& b) {
    return a.n == b.n && a.m == b.m && a.flags.is_tournament == b.flags.is_tournament &&
           a.flags.is_semicomplete == b.flags.is_semicomplete &&
           a.flags.is_acyclic == b.flags.is_acyclic && a.flags.is_strong == b.flags.is_strong &&
           a.flags.is_oriented == b.flags.is_oriented;
  }
};

InputSummary summarize(const Digraph& d);

/// One top-level record per CLI run. The result payload is already in its
/// structured form; the helpers below build it from library types.
struct RunReport {
  std::string command;
  std::optional<InputSummary> input;
  Json result;
  /// Wall-clock seconds per phase, all non-negative.
  std::map<std::string, double> timing;
  std::optional<std::uint64_t> seed;

  Json to_json() const;
  /// Throws InputError on a missing or mistyped field.
  static RunReport from_json(const Json& j);

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Integers for feasible sizes, the string "INFEASIBLE" otherwise.
Json size_to_json(const Size& s);
Size size_from_json(const Json& j);

Json to_json(const Classification& c);
Json to_json(const Condensation& c);
Json to_json(const SafeSetCertificate& cert);
Json to_json(const SolveResult& r);
Json to_json(const DpTable& t);
Json to_json(const ScanResult& r);
Json to_json(const ReductionMap& m);

/// The DP rows in the layout of a per-component table: one block per a,
/// from a = p down to 1, listing b, s*(a,b), S*(a,b) and its split.
std::string dp_tables_text(const DpTable& t, const Digraph& d);

}  // namespace safeset
