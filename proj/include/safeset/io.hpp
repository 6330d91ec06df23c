#pragma once

#include <string>
#include <string_view>

#include "safeset/cnf.hpp"
#include "safeset/digraph.hpp"
#include "safeset/reductions.hpp"

namespace safeset {

// Digraph text format:
//   n m
//   u v          (m lines, arc u->v, 0-indexed)
// `#` starts a comment, blank lines are ignored. Optional vertex names are
// carried in comment lines `#label <id> <name>`, which other readers skip.

/// Throws ParseError with the offending line number.
Digraph parse_digraph(std::string_view text);
/// Arcs in lexicographic order; labels as `#label` lines when present.
std::string emit_digraph(const Digraph& d);

/// DIMACS CNF: `c` comments, header `p cnf <vars> <clauses>`, clauses as
/// zero-terminated literal lists (possibly spanning lines).
CnfFormula parse_dimacs(std::string_view text);
std::string emit_dimacs(const CnfFormula& f);

/// Set cover: line 1 `ground_size num_sets`, then one line per set listing
/// its 1-based elements. `#` comments allowed.
SetCoverInstance parse_setcover(std::string_view text);
std::string emit_setcover(const SetCoverInstance& inst);

/// Comma- or space-separated vertex ids, e.g. "0,3,5".
VertexSet parse_vertex_list(std::string_view text);

/// Whole contents of `path`, or standard input for "-". Throws InputError
/// when the file cannot be opened.
std::string read_input(const std::string& path);
/// Writes to `path`, or standard output for "-".
void write_output(const std::string& path, std::string_view content);

}  // namespace safeset
