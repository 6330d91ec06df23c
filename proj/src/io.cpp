#include "safeset/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "safeset/errors.hpp"

namespace safeset {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  while (!text.empty()) {
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string_view strip_comment(std::string_view s, char marker) {
  const auto pos = s.find(marker);
  return pos == std::string_view::npos ? s : s.substr(0, pos);
}

template <class Int>
Int to_int(std::string_view token, int line, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  const auto lines = split_lines(text);
  bool have_header = false;
  int n = 0;
  long long m = 0;
  int header_line = 0;
  long long seen = 0;
  Digraph d;
  std::vector<std::pair<int, std::pair<Vertex, std::string>>> labels;

  for (const Line& line : lines) {
    const auto trimmed = tokens(line.text);
    if (!trimmed.empty() && trimmed[0] == "#label") {
      if (trimmed.size() != 3) throw ParseError(line.number, "label line needs '#label <id> <name>'");
      labels.push_back({line.number, {to_int<int>(trimmed[1], line.number, "vertex id"),
                                      std::string(trimmed[2])}});
      continue;
    }
    const auto fields = tokens(strip_comment(line.text, '#'));
    if (fields.empty()) continue;
    if (fields.size() != 2)
      throw ParseError(line.number, have_header ? "arc line needs two vertex ids"
                                                : "header needs 'n m'");
    if (!have_header) {
      n = to_int<int>(fields[0], line.number, "vertex count");
      m = to_int<long long>(fields[1], line.number, "arc count");
      if (n < 0 || m < 0) throw ParseError(line.number, "negative count in header");
      have_header = true;
      header_line = line.number;
      d = Digraph(n);
      continue;
    }
    const Vertex u = to_int<int>(fields[0], line.number, "vertex id");
    const Vertex v = to_int<int>(fields[1], line.number, "vertex id");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line.number, "vertex out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    if (seen == m) throw ParseError(line.number, "more arcs than the header's " + std::to_string(m));
    if (!d.add_arc(u, v)) throw ParseError(line.number, "duplicate arc");
    ++seen;
  }
  if (!have_header) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing header 'n m'");
  if (seen != m)
    throw ParseError(header_line, "header announces " + std::to_string(m) + " arcs, found " +
                                      std::to_string(seen));
  for (const auto& [number, entry] : labels) {
    if (entry.first < 0 || entry.first >= n) throw ParseError(number, "label for unknown vertex");
    d.set_label(entry.first, entry.second);
  }
  return d;
}

std::string emit_digraph(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.arc_count() << '\n';
  if (d.has_labels())
    for (Vertex v = 0; v < d.order(); ++v)
      if (!d.labels()[v].empty()) out << "#label " << v << ' ' << d.labels()[v] << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  long long declared = 0;
  int header_line = 0;
  std::vector<int> current;
  int widest = 0;
  for (const Line& line : split_lines(text)) {
    const auto fields = tokens(line.text);
    if (fields.empty() || fields[0] == "c" || fields[0][0] == 'c' || fields[0][0] == '%') continue;
    if (fields[0] == "p") {
      if (have_header) throw ParseError(line.number, "second problem line");
      if (fields.size() != 4 || fields[1] != "cnf")
        throw ParseError(line.number, "problem line needs 'p cnf <vars> <clauses>'");
      f.num_vars = to_int<int>(fields[2], line.number, "variable count");
      declared = to_int<long long>(fields[3], line.number, "clause count");
      if (f.num_vars < 0 || declared < 0) throw ParseError(line.number, "negative count");
      have_header = true;
      header_line = line.number;
      continue;
    }
    if (!have_header) throw ParseError(line.number, "clause before problem line");
    for (auto token : fields) {
      const int lit = to_int<int>(token, line.number, "literal");
      if (lit == 0) {
        if (current.empty()) throw ParseError(line.number, "empty clause");
        widest = std::max(widest, static_cast<int>(current.size()));
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > f.num_vars || -lit > f.num_vars)
        throw ParseError(line.number, "literal " + std::to_string(lit) + " outside 1.." +
                                          std::to_string(f.num_vars));
      current.push_back(lit);
    }
  }
  if (!have_header) throw ParseError(1, "missing problem line 'p cnf <vars> <clauses>'");
  if (!current.empty()) throw ParseError(header_line, "last clause is not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != declared)
    throw ParseError(header_line, "header announces " + std::to_string(declared) +
                                      " clauses, found " + std::to_string(f.clauses.size()));
  f.max_clause_width = std::max(3, widest);
  return f;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

SetCoverInstance parse_setcover(std::string_view text) {
  SetCoverInstance inst;
  bool have_header = false;
  int declared = 0;
  int header_line = 0;
  for (const Line& line : split_lines(text)) {
    const auto fields = tokens(strip_comment(line.text, '#'));
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 2) throw ParseError(line.number, "header needs 'ground_size num_sets'");
      inst.ground_size = to_int<int>(fields[0], line.number, "ground set size");
      declared = to_int<int>(fields[1], line.number, "set count");
      if (inst.ground_size < 0 || declared < 0) throw ParseError(line.number, "negative count");
      have_header = true;
      header_line = line.number;
      continue;
    }
    if (static_cast<int>(inst.sets.size()) == declared)
      throw ParseError(line.number, "more sets than the header's " + std::to_string(declared));
    std::vector<int> set;
    for (auto token : fields) {
      const int x = to_int<int>(token, line.number, "element");
      if (x < 1 || x > inst.ground_size)
        throw ParseError(line.number, "element " + std::to_string(x) + " outside 1.." +
                                          std::to_string(inst.ground_size));
      set.push_back(x);
    }
    inst.sets.push_back(std::move(set));
  }
  if (!have_header) throw ParseError(1, "missing header 'ground_size num_sets'");
  if (static_cast<int>(inst.sets.size()) != declared)
    throw ParseError(header_line, "header announces " + std::to_string(declared) +
                                      " sets, found " + std::to_string(inst.sets.size()));
  return inst;
}

std::string emit_setcover(const SetCoverInstance& inst) {
  std::ostringstream out;
  out << inst.ground_size << ' ' << inst.sets.size() << '\n';
  for (const auto& set : inst.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
    out << '\n';
  }
  return out.str();
}

VertexSet parse_vertex_list(std::string_view text) {
  std::string spaced(text);
  for (char& c : spaced)
    if (c == ',') c = ' ';
  VertexSet set;
  for (auto token : tokens(spaced)) {
    Vertex v{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw InputError("bad vertex id '" + std::string(token) + "' in set");
    set.push_back(v);
  }
  return normalize(std::move(set));
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

}  // namespace safeset
