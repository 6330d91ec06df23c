#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "safeset/bench.hpp"
#include "safeset/errors.hpp"
#include "safeset/generators.hpp"
#include "safeset/io.hpp"
#include "safeset/reductions.hpp"
#include "safeset/report.hpp"
#include "safeset/solvers.hpp"
#include "safeset/verify.hpp"

using namespace safeset;

namespace {

// Exit status per error category; 0 is success.
int exit_code(const std::string& category) {
  if (category == "input_error") return 2;
  if (category == "parse_error") return 3;
  if (category == "precondition_error") return 4;
  if (category == "parameter_error") return 5;
  if (category == "refused") return 6;
  if (category == "usage_error") return 64;
  return 70;
}

int report_error(const std::string& category, const std::string& message, int line = 0) {
  Json record{{"category", category}, {"message", message}};
  if (line > 0) record["line"] = line;
  std::cerr << Json{{"error", record}}.dump() << '\n';
  return exit_code(category);
}

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return seconds;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string set_text(const VertexSet& s, const Digraph& d) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + d.label(s[i]);
  return out + "}";
}

struct Options {
  std::string format = "json";
  int threads = 1;
  std::string file = "-";
  std::string output = "-";
  std::string map_out;

  std::string set;
  bool strong = false;
  bool indominating = false;
  std::string method = "auto";
  std::optional<int> alpha_cap;
  bool tables = false;

  int scan_n = 0;
  int scan_k = 0;
  bool allow_n7 = false;

  std::string family;
  std::optional<int> k, kprime, n;
  std::uint64_t seed = 0;
  double digon_prob = 0.25;

  std::string reduce_kind;
  std::string sat4_out;

  std::vector<int> lsc_values;
  int bench_n = 0;
};

void emit(const Options& opt, const RunReport& report, const std::string& text) {
  if (opt.format == "text")
    std::cout << text;
  else
    std::cout << report.to_json().dump(2) << '\n';
}

Digraph load(const Options& opt, RunReport& report, Stopwatch& clock) {
  Digraph d = parse_digraph(read_input(opt.file));
  report.input = summarize(d);
  report.timing["parse"] = clock.lap();
  return d;
}

int run_scc(const Options& opt) {
  Stopwatch clock;
  RunReport report;
  report.command = "scc";
  const Digraph d = load(opt, report, clock);
  const Condensation c = scc_decompose(d);
  report.timing["solve"] = clock.lap();
  report.result = to_json(c);
  std::ostringstream text;
  for (std::size_t i = 0; i < c.size(); ++i)
    text << "C" << i + 1 << " " << set_text(c.components[i], d) << '\n';
  emit(opt, report, text.str());
  return 0;
}

int run_classify(const Options& opt) {
  Stopwatch clock;
  RunReport report;
  report.command = "classify";
  const Digraph d = load(opt, report, clock);
  const Classification c = classify(d);
  const int kappa = vertex_connectivity(d);
  const int largest = lsc(d);
  report.timing["solve"] = clock.lap();
  report.result = to_json(c);
  report.result["kappa"] = kappa;
  report.result["lsc"] = largest;
  std::ostringstream text;
  text << "n=" << d.order() << " m=" << d.arc_count() << " tournament=" << c.is_tournament
       << " semicomplete=" << c.is_semicomplete << " acyclic=" << c.is_acyclic
       << " strong=" << c.is_strong << " oriented=" << c.is_oriented << " kappa=" << kappa
       << " lsc=" << largest << '\n';
  emit(opt, report, text.str());
  return 0;
}

int run_check(const Options& opt) {
  if (opt.strong && opt.indominating) throw InputError("--strong and --indominating are exclusive");
  Stopwatch clock;
  RunReport report;
  report.command = "check";
  const Digraph d = load(opt, report, clock);
  const VertexSet s = parse_vertex_list(opt.set);
  const SafeSetCertificate cert = opt.indominating ? is_in_dominating(d, s)
                                  : opt.strong     ? is_strong_safe_set(d, s)
                                                   : is_safe_set(d, s);
  report.timing["verify"] = clock.lap();
  report.result = to_json(cert);
  report.result["property"] = opt.indominating ? "in-dominating" : opt.strong ? "strong-safe" : "safe";
  report.result["set"] = s;
  std::ostringstream text;
  text << (cert.verdict ? "PASS" : "FAIL") << ' ' << set_text(s, d) << '\n';
  for (const auto& v : cert.violations) {
    text << "  " << to_string(v.kind) << " outside=" << set_text(v.outside, d);
    if (!v.inside.empty()) text << " inside=" << set_text(v.inside, d);
    if (v.arc_tail >= 0) text << " arc=" << d.label(v.arc_tail) << "->" << d.label(v.arc_head);
    text << '\n';
  }
  emit(opt, report, text.str());
  return 0;
}

int run_solve(const Options& opt) {
  if (opt.strong && opt.indominating) throw InputError("--strong and --indominating are exclusive");
  if (opt.tables && (opt.strong || opt.indominating))
    throw InputError("--tables applies to the safe-set dynamic program only");
  if (opt.alpha_cap && !opt.indominating) throw InputError("--alpha-cap needs --indominating");
  Method method = parse_method(opt.method);
  if (opt.tables) {
    if (method == Method::Brute) throw InputError("--tables needs --method dp or auto");
    method = Method::Dp;
  }

  Stopwatch clock;
  RunReport report;
  report.command = "solve";
  const Digraph d = load(opt, report, clock);
  std::ostringstream text;
  SolveResult r;
  std::string property = "safe";
  if (opt.indominating) {
    property = "in-dominating";
    r = min_indominating(d, opt.alpha_cap);
  } else if (opt.strong) {
    property = "strong-safe";
    r = min_strong_safe_set(d);
  } else {
    r = min_safe_set(d, {method, opt.threads});
  }
  report.timing["solve"] = clock.lap();
  report.result = to_json(r);
  report.result["property"] = property;
  if (opt.alpha_cap) report.result["alpha_cap"] = *opt.alpha_cap;

  if (opt.tables) {
    const DpTable table = dp_tables(d, opt.threads);
    report.timing["tables"] = clock.lap();
    report.result["tables"] = to_json(table);
    text << dp_tables_text(table, d);
  } else {
    text << property << " number: " << r.size;
    if (r.size.feasible()) text << "  set " << set_text(r.set, d);
    text << "  (" << to_string(r.method) << ")\n";
  }
  emit(opt, report, text.str());
  return 0;
}

int run_fvs(const Options& opt) {
  Stopwatch clock;
  RunReport report;
  report.command = "fvs";
  const Digraph d = load(opt, report, clock);
  const SolveResult r = min_feedback_vertex_set(d);
  report.timing["solve"] = clock.lap();
  report.result = to_json(r);
  emit(opt, report, "feedback vertex set: " + r.size.to_string() + "  " + set_text(r.set, d) + "\n");
  return 0;
}

int run_scan(const Options& opt) {
  Stopwatch clock;
  RunReport report;
  report.command = "scan";
  const ScanResult r = extremal_scan(opt.scan_n, opt.scan_k, {opt.allow_n7, opt.threads});
  report.timing["scan"] = clock.lap();
  report.result = to_json(r);
  std::ostringstream text;
  text << "n=" << r.n << " k=" << r.k << " tournaments=" << r.tournaments
       << " matching=" << r.matching;
  if (!r.empty())
    text << " s_min=" << r.s_min << " s_max=" << r.s_max << " ss_min=" << r.ss_min
         << " ss_max=" << r.ss_max;
  text << '\n';
  emit(opt, report, text.str());
  return 0;
}

int run_gen(const Options& opt) {
  Stopwatch clock;
  FamilySpec spec;
  spec.family = parse_family(opt.family);
  spec.k = opt.k;
  spec.kprime = opt.kprime;
  spec.n = opt.n;
  spec.seed = opt.seed;
  spec.digon_prob = opt.digon_prob;
  const Digraph d = generate(spec);
  RunReport report;
  report.command = "gen";
  report.input = summarize(d);
  report.timing["generate"] = clock.lap();
  if (spec.family == Family::RandomTournament || spec.family == Family::RandomSemicomplete)
    report.seed = spec.seed;
  report.result = {{"family", to_string(spec.family)}, {"output", opt.output}};
  write_output(opt.output, emit_digraph(d));
  if (opt.output != "-")
    emit(opt, report, "wrote " + to_string(spec.family) + " (n=" + std::to_string(d.order()) +
                          ") to " + opt.output + "\n");
  return 0;
}

int run_reduce(const Options& opt) {
  Stopwatch clock;
  RunReport report;
  report.command = "reduce " + opt.reduce_kind;
  const std::string input = read_input(opt.file);
  Digraph target;
  ReductionMap map;
  if (opt.reduce_kind == "setcover") {
    const SetCoverInstance inst = parse_setcover(input);
    report.timing["parse"] = clock.lap();
    SetCoverGadget g = setcover_to_indominating(inst);
    report.result = {{"ground_size", inst.ground_size}, {"num_sets", inst.sets.size()}};
    target = std::move(g.digraph);
    map = std::move(g.map);
  } else if (opt.reduce_kind == "sat") {
    const CnfFormula f = parse_dimacs(input);
    report.timing["parse"] = clock.lap();
    if (f.max_clause_width > 3) throw InputError("reduce sat expects clauses of width at most 3");
    const IrreducibleResult irr = make_irreducible(f);
    const TraceableSat4 sat4 = sat3_to_traceable_sat4(irr.formula);
    TraceableDagGadget g = traceable_sat4_to_dag(sat4.formula, sat4.path);
    report.result = {{"source_vars", f.num_vars},
                     {"source_clauses", f.clauses.size()},
                     {"irreducible_vars", irr.formula.num_vars},
                     {"irreducible_clauses", irr.formula.clauses.size()},
                     {"kept_variables", irr.kept_variables},
                     {"kept_clauses", irr.kept_clauses},
                     {"sat4_vars", sat4.formula.num_vars},
                     {"sat4_clauses", sat4.formula.clauses.size()},
                     {"sat4_path", sat4.path},
                     {"k", g.k},
                     {"hamiltonian_path", g.hamiltonian_path}};
    if (!opt.sat4_out.empty()) write_output(opt.sat4_out, emit_dimacs(sat4.formula));
    target = std::move(g.digraph);
    map = std::move(g.map);
  } else if (opt.reduce_kind == "fvs") {
    const Digraph t = parse_digraph(input);
    report.input = summarize(t);
    report.timing["parse"] = clock.lap();
    FvsGadget g = fvs_to_safeset(t);
    report.result = {{"sink", g.sink}};
    target = std::move(g.tournament);
    map = std::move(g.map);
  } else {
    throw InputError("unknown reduction '" + opt.reduce_kind + "'");
  }
  report.timing["reduce"] = clock.lap();
  report.result["target_n"] = target.order();
  report.result["target_m"] = target.arc_count();
  report.result["size_offset"] = map.size_offset;
  write_output(opt.output, emit_digraph(target));
  if (!opt.map_out.empty()) write_output(opt.map_out, to_json(map).dump(2) + "\n");
  if (opt.output != "-")
    emit(opt, report, map.source_problem + " -> " + map.target_problem + ": n=" +
                          std::to_string(target.order()) + " written to " + opt.output + "\n");
  return 0;
}

int run_bench(const Options& opt) {
  const BenchResult r = bench_dp(opt.lsc_values, opt.bench_n, opt.seed, opt.threads);
  const RunReport report = bench_report(r);
  std::ostringstream text;
  text << "lsc  n  components  subsets  closed_form  seconds  s\n";
  for (const BenchRow& row : r.rows)
    text << row.lsc << "  " << row.n << "  " << row.components << "  " << row.subsets_examined
         << "  " << row.closed_form << "  " << row.wall_seconds << "  " << row.s << '\n';
  emit(opt, report, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Safe sets in digraphs: solvers, verifiers, generators and reductions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", opt.threads, "Worker threads for the DP and the scan")
      ->envname("SAFESET_THREADS")
      ->check(CLI::PositiveNumber);

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "Input file, '-' for standard input");
  };

  auto* scc = app.add_subcommand("scc", "Strong components in topological order");
  add_file(scc);
  auto* cls = app.add_subcommand("classify", "Classification flags, kappa and lsc");
  add_file(cls);

  auto* check = app.add_subcommand("check", "Verify a vertex set and print its certificate");
  check->add_option("--set", opt.set, "Vertex ids, e.g. 0,3,5")->required();
  check->add_flag("--strong", opt.strong, "Check for a strong safe set");
  check->add_flag("--indominating", opt.indominating, "Check for an in-dominating set");
  add_file(check);

  auto* solve = app.add_subcommand("solve", "Minimum safe, strong safe or in-dominating set");
  solve->add_option("--method", opt.method, "brute, dp or auto")
      ->check(CLI::IsMember({"brute", "dp", "auto"}));
  solve->add_flag("--strong", opt.strong, "Minimum strong safe set");
  solve->add_flag("--indominating", opt.indominating, "Minimum in-dominating set");
  solve->add_option("--alpha-cap", opt.alpha_cap, "Largest in-dominating set size to search");
  solve->add_flag("--tables", opt.tables, "Dump the dynamic-programming tables");
  add_file(solve);

  auto* fvs = app.add_subcommand("fvs", "Minimum feedback vertex set");
  add_file(fvs);

  auto* scan = app.add_subcommand("scan", "Extremal s and ss over all tournaments with kappa = k");
  scan->add_option("--n", opt.scan_n, "Order")->required();
  scan->add_option("--k", opt.scan_k, "Vertex connectivity")->required();
  scan->add_flag("--allow-n7", opt.allow_n7, "Permit the n = 7 scan");

  auto* gen = app.add_subcommand("gen", "Generate a digraph family member");
  gen->add_option("--family", opt.family, "Family name")->required();
  gen->add_option("--k", opt.k, "k");
  gen->add_option("--kprime", opt.kprime, "k'");
  gen->add_option("--n", opt.n, "Order");
  gen->add_option("--seed", opt.seed, "PRNG seed");
  gen->add_option("--digon-prob", opt.digon_prob, "Digon probability for random_semicomplete");
  gen->add_option("-o,--output", opt.output, "Output file, '-' for standard output");

  auto* reduce = app.add_subcommand("reduce", "Build a hardness gadget");
  reduce->add_option("kind", opt.reduce_kind, "setcover, sat or fvs")
      ->required()
      ->check(CLI::IsMember({"setcover", "sat", "fvs"}));
  reduce->add_option("file", opt.file, "Instance file, '-' for standard input");
  reduce->add_option("-o,--output", opt.output, "Gadget digraph output, '-' for standard output");
  reduce->add_option("--map-out", opt.map_out, "Write the reduction map as JSON");
  reduce->add_option("--sat4-out", opt.sat4_out, "Write the traceable 4-SAT formula (sat only)");

  auto* bench = app.add_subcommand("bench", "Dynamic-program scaling benchmark");
  bench->add_option("--lsc", opt.lsc_values, "Component sizes")->required()->delimiter(',');
  bench->add_option("--n", opt.bench_n, "Order of each chain")->required();
  bench->add_option("--seed", opt.seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report_error("usage_error", e.what());
  }

  try {
    if (app.got_subcommand(scc)) return run_scc(opt);
    if (app.got_subcommand(cls)) return run_classify(opt);
    if (app.got_subcommand(check)) return run_check(opt);
    if (app.got_subcommand(solve)) return run_solve(opt);
    if (app.got_subcommand(fvs)) return run_fvs(opt);
    if (app.got_subcommand(scan)) return run_scan(opt);
    if (app.got_subcommand(gen)) return run_gen(opt);
    if (app.got_subcommand(reduce)) return run_reduce(opt);
    if (app.got_subcommand(bench)) return run_bench(opt);
  } catch (const ParseError& e) {
    return report_error(e.category(), e.what(), e.line());
  } catch (const Error& e) {
    return report_error(e.category(), e.what());
  } catch (const std::exception& e) {
    return report_error("internal_error", e.what());
  }
  return report_error("usage_error", "no command given");
}
