#include <doctest.h>

#include "safeset/bench.hpp"
#include "safeset/errors.hpp"
#include "safeset/report.hpp"
#include "support.hpp"

using namespace safeset;
using namespace safeset::testing;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_digraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse_digraph examples") {
  CHECK(parse_digraph("3 3\n0 1\n1 2\n2 0") == cycle(3));
  const Digraph one = parse_digraph("1 0");
  CHECK(one.order() == 1);
  CHECK(one.arc_count() == 0);
  CHECK(parse_error_line("2 1\n0 0") == 2);
}

TEST_CASE("comments, blank lines and CRLF are tolerated") {
  const Digraph d = parse_digraph("# header follows\r\n\r\n3 2 # trailing\r\n0 1\r\n\r\n# gap\r\n1 2\r\n");
  CHECK(d == path(3));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("3\n") == 1);
  CHECK(parse_error_line("x 2\n") == 1);
  CHECK(parse_error_line("2 1\n0 5\n") == 2);
  CHECK(parse_error_line("2 1\n\n0 1\n1 0\n") == 4);
  CHECK(parse_error_line("2 2\n0 1\n0 1\n") == 3);
  CHECK(parse_error_line("# c\n3 2\n0 1\n") == 2);
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
}

TEST_CASE("emit writes sorted arcs and labels; parse(emit(D)) = D") {
  Digraph d(3);
  d.add_arc(2, 0);
  d.add_arc(0, 2);
  d.add_arc(1, 0);
  CHECK(emit_digraph(d) == "3 3\n0 2\n1 0\n2 0\n");

  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 15);
    const Digraph r = random_digraph(n, uniform(rng), rng);
    CHECK(parse_digraph(emit_digraph(r)) == r);
  }

  const Digraph fig = figure1();
  const Digraph again = parse_digraph(emit_digraph(fig));
  CHECK(again == fig);
  CHECK(again.labels() == fig.labels());
  CHECK(again.label(0) == "a1");
}

TEST_CASE("DIMACS round trip and errors") {
  const CnfFormula f = parse_dimacs("c example\np cnf 3 2\n1 -2\n 3 0 -1 0\n");
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::vector<int>{1, -2, 3});
  CHECK(f.clauses[1] == std::vector<int>{-1});
  CHECK(parse_dimacs(emit_dimacs(f)) == f);

  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), ParseError);

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const CnfFormula r = random_cnf(6, 8, rng);
    CHECK(parse_dimacs(emit_dimacs(r)) == r);
  }
}

TEST_CASE("set cover format") {
  const SetCoverInstance inst = parse_setcover("# two sets\n3 2\n1 2\n2 3\n");
  CHECK(inst.ground_size == 3);
  CHECK(inst.sets == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
  const SetCoverInstance again = parse_setcover(emit_setcover(inst));
  CHECK(again.sets == inst.sets);
  CHECK_THROWS_AS(parse_setcover("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_setcover("3 1\n4\n"), ParseError);
}

TEST_CASE("vertex lists") {
  CHECK(parse_vertex_list("5,0,3") == VertexSet{0, 3, 5});
  CHECK(parse_vertex_list("1 2, 2") == VertexSet{1, 2});
  CHECK(parse_vertex_list("").empty());
  CHECK_THROWS_AS(parse_vertex_list("1,a"), InputError);
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(read_input("/nonexistent/file.dg"), InputError);
}

TEST_CASE("sizes serialize as integers or the INFEASIBLE token") {
  CHECK(size_to_json(Size(4)) == Json(4));
  CHECK(size_to_json(Size::infeasible()) == Json("INFEASIBLE"));
  CHECK(size_from_json(Json(7)) == Size(7));
  CHECK(size_from_json(Json("INFEASIBLE")) == Size::infeasible());
  CHECK_THROWS_AS(size_from_json(Json(-1)), InputError);
  CHECK_THROWS_AS(size_from_json(Json("inf")), InputError);
}

TEST_CASE("run reports round-trip losslessly") {
  const Digraph d = figure1();
  RunReport report;
  report.command = "solve";
  report.input = summarize(d);
  report.result = to_json(dp_tables(d));
  report.result["certificate"] = to_json(is_safe_set(d, {0}));
  report.timing = {{"parse", 0.000123456789}, {"solve", 1.5}};
  report.seed = 18446744073709551615ULL;
  const std::string text = report.to_json().dump();
  const RunReport back = RunReport::from_json(Json::parse(text));
  CHECK(back == report);
  CHECK(back.to_json().dump() == text);

  RunReport bare;
  bare.command = "scan";
  bare.result = to_json(extremal_scan(4, 1));
  CHECK(RunReport::from_json(bare.to_json()) == bare);

  Json bad = report.to_json();
  bad["timing"]["parse"] = -1.0;
  CHECK_THROWS_AS(RunReport::from_json(bad), InputError);
  bad.erase("command");
  CHECK_THROWS_AS(RunReport::from_json(bad), InputError);
}

TEST_CASE("dp table json uses the INFEASIBLE token and lists rows from a = p down") {
  const Json j = to_json(dp_tables(figure1()));
  CHECK(j["p"] == 4);
  CHECK(j["rows"][0]["a"] == 4);
  CHECK(j["rows"][0]["cells"][1]["size"] == "INFEASIBLE");
  CHECK(j["rows"][3]["cells"][0]["size"] == 5);
  const std::string text = dp_tables_text(dp_tables(figure1()), figure1());
  CHECK(text.find("s(D) = 5") != std::string::npos);
}

TEST_CASE("bench counts match the closed form") {
  const BenchResult r = bench_dp({3, 4, 5}, 40, 9);
  REQUIRE(r.rows.size() == 3);
  for (const BenchRow& row : r.rows) {
    CHECK(row.subsets_examined == row.closed_form);
    CHECK(row.wall_seconds >= 0.0);
  }
  CHECK(r.rows[0].components == 14);
  CHECK(r.rows[0].closed_form == 13 * 8 + 2);
  const BenchResult ones = bench_dp({1}, 100, 1);
  CHECK(ones.rows[0].s == Size(1));
  CHECK(ones.rows[0].subsets_examined == 200);
  CHECK_THROWS_AS(bench_dp({21}, 100, 1), RefusedError);
  CHECK_THROWS_AS(bench_dp({10}, 5, 1), ParameterError);
  const RunReport report = bench_report(r);
  CHECK(RunReport::from_json(report.to_json()) == report);
}

}  // TEST_SUITE
