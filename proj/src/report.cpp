#include "safeset/report.hpp"

#include <sstream>

#include "safeset/errors.hpp"

namespace safeset {

namespace {

Json arcs_json(const Digraph& d) {
  Json arcs = Json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return Json{{"n", d.order()}, {"arcs", arcs}};
}

std::string set_text(const VertexSet& s, const Digraph& d) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + d.label(s[i]);
  return out + "}";
}

template <class T>
T field(const Json& j, const char* name) {
  if (!j.contains(name)) throw InputError(std::string("report is missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("report field '") + name + "' has the wrong type");
  }
}

}  // namespace

InputSummary summarize(const Digraph& d) { return {d.order(), d.arc_count(), classify(d)}; }

Json size_to_json(const Size& s) {
  return s.feasible() ? Json(static_cast<std::uint64_t>(s.value())) : Json("INFEASIBLE");
}

Size size_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "INFEASIBLE") return Size::infeasible();
  if (j.is_number_unsigned()) return Size(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Size(static_cast<std::uint64_t>(j.get<std::int64_t>()));
  throw InputError("size must be a non-negative integer or \"INFEASIBLE\"");
}

Json to_json(const Classification& c) {
  return {{"tournament", c.is_tournament}, {"semicomplete", c.is_semicomplete},
          {"acyclic", c.is_acyclic},       {"strong", c.is_strong},
          {"oriented", c.is_oriented}};
}

Json to_json(const Condensation& c) {
  Json components = Json::array();
  for (const auto& comp : c.components) components.push_back(comp);
  return {{"count", c.size()}, {"components", components}};
}

Json to_json(const SafeSetCertificate& cert) {
  Json violations = Json::array();
  for (const auto& v : cert.violations) {
    Json entry{{"kind", to_string(v.kind)}, {"outside", v.outside}};
    if (!v.inside.empty()) entry["inside"] = v.inside;
    if (v.arc_tail >= 0) entry["arc"] = {v.arc_tail, v.arc_head};
    if (v.kind == ViolationKind::InducedNotStrong) entry["inside_components"] = v.inside_components;
    violations.push_back(entry);
  }
  return {{"verdict", cert.verdict}, {"violations", violations}};
}

Json to_json(const SolveResult& r) {
  return {{"size", size_to_json(r.size)},
          {"set", r.set},
          {"method", to_string(r.method)},
          {"subsets_examined", r.stats.subsets_examined}};
}

Json to_json(const DpTable& t) {
  Json rows = Json::array();
  for (int a = t.p; a >= 1; --a) {
    Json cells = Json::array();
    for (int b = 1; b <= t.lsc; ++b) {
      const DpCell& c = t.cell(a, b);
      Json cell{{"b", b}, {"size", size_to_json(c.size)}};
      if (c.size.feasible()) {
        cell["set"] = c.set;
        cell["own"] = c.own;
        cell["next_b"] = c.next_b;
      }
      cells.push_back(cell);
    }
    rows.push_back({{"a", a}, {"component", t.condensation.components[a - 1]}, {"cells", cells}});
  }
  return {{"p", t.p}, {"lsc", t.lsc}, {"subsets_examined", t.subsets_examined}, {"rows", rows}};
}

Json to_json(const ScanResult& r) {
  Json j{{"n", r.n},
         {"k", r.k},
         {"tournaments", r.tournaments},
         {"matching", r.matching}};
  if (r.empty()) return j;
  j["s_min"] = size_to_json(r.s_min);
  j["s_max"] = size_to_json(r.s_max);
  j["ss_min"] = size_to_json(r.ss_min);
  j["ss_max"] = size_to_json(r.ss_max);
  Json witnesses;
  if (r.s_min_witness) witnesses["s_min"] = arcs_json(*r.s_min_witness);
  if (r.s_max_witness) witnesses["s_max"] = arcs_json(*r.s_max_witness);
  if (r.ss_min_witness) witnesses["ss_min"] = arcs_json(*r.ss_min_witness);
  if (r.ss_max_witness) witnesses["ss_max"] = arcs_json(*r.ss_max_witness);
  j["witnesses"] = witnesses;
  return j;
}

Json to_json(const ReductionMap& m) {
  Json correspondences = Json::array();
  for (const auto& [source, targets] : m.correspondences)
    correspondences.push_back({{"source", source}, {"targets", targets}});
  return {{"source_problem", m.source_problem},
          {"target_problem", m.target_problem},
          {"size_offset", m.size_offset},
          {"target_roles", m.target_roles},
          {"correspondences", correspondences}};
}

Json RunReport::to_json() const {
  Json j{{"command", command}};
  if (input)
    j["input"] = {{"n", input->n}, {"m", input->m}, {"flags", safeset::to_json(input->flags)}};
  j["result"] = result;
  Json t = Json::object();
  for (const auto& [phase, seconds] : timing) t[phase] = seconds;
  j["timing"] = t;
  if (seed) j["seed"] = *seed;
  return j;
}

RunReport RunReport::from_json(const Json& j) {
  if (!j.is_object()) throw InputError("report must be a JSON object");
  RunReport r;
  r.command = field<std::string>(j, "command");
  if (j.contains("input")) {
    const Json& in = j.at("input");
    InputSummary s;
    s.n = field<int>(in, "n");
    s.m = field<std::size_t>(in, "m");
    const Json& flags = in.at("flags");
    s.flags.is_tournament = field<bool>(flags, "tournament");
    s.flags.is_semicomplete = field<bool>(flags, "semicomplete");
    s.flags.is_acyclic = field<bool>(flags, "acyclic");
    s.flags.is_strong = field<bool>(flags, "strong");
    s.flags.is_oriented = field<bool>(flags, "oriented");
    r.input = s;
  }
  if (!j.contains("result")) throw InputError("report is missing field 'result'");
  r.result = j.at("result");
  const Json timing = field<Json>(j, "timing");
  for (const auto& [phase, seconds] : timing.items()) {
    if (!seconds.is_number() || seconds.get<double>() < 0.0)
      throw InputError("timing '" + phase + "' must be a non-negative number");
    r.timing[phase] = seconds.get<double>();
  }
  if (j.contains("seed")) r.seed = field<std::uint64_t>(j, "seed");
  return r;
}

std::string dp_tables_text(const DpTable& t, const Digraph& d) {
  std::ostringstream out;
  for (int a = t.p; a >= 1; --a) {
    out << "a = " << a << "  C" << a << " = " << set_text(t.condensation.components[a - 1], d)
        << '\n';
    out << "  b  s*(" << a << ",b)  S*(" << a << ",b)\n";
    for (int b = 1; b <= t.lsc; ++b) {
      const DpCell& c = t.cell(a, b);
      out << "  " << b << "  ";
      if (!c.size.feasible()) {
        out << "inf  -\n";
        continue;
      }
      out << c.size << "  " << set_text(c.set, d);
      if (a < t.p) {
        out << " = " << (c.own.empty() ? std::string("{}") : set_text(c.own, d));
        if (c.next_b > 0) out << " + S*(" << a + 1 << "," << c.next_b << ")";
      }
      out << '\n';
    }
  }
  Size best = Size::infeasible();
  for (int b = 1; b <= t.lsc; ++b) best = std::min(best, t.cell(1, b).size);
  out << "s(D) = " << best << '\n';
  return out.str();
}

}  // namespace safeset
