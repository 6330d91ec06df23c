#include "safeset/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "safeset/errors.hpp"

namespace safeset {

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::Transitive, "transitive"},
    {Family::CirculantTk, "circulant_Tk"},
    {Family::ExtendedTk, "extended_Tk"},
    {Family::TPrime, "Tprime"},
    {Family::TTriplePrime, "Ttripleprime"},
    {Family::TDagger, "Tdag"},
    {Family::TStar, "Tstar"},
    {Family::TStarStar, "Tstarstar"},
    {Family::RandomTournament, "random_tournament"},
    {Family::RandomSemicomplete, "random_semicomplete"},
};

int require(const std::optional<int>& value, const char* name, Family f) {
  if (!value) throw ParameterError(to_string(f) + " needs parameter " + name);
  return *value;
}

void ensure(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

int mod(int a, int m) { return ((a % m) + m) % m; }

Digraph transitive(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.add_arc(i, j);
  return d;
}

void label_zero_based(Digraph& d, int count, const std::string& prefix = "v") {
  for (int i = 0; i < count; ++i) d.set_label(i, prefix + std::to_string(i));
}

void label_one_based(Digraph& d) {
  for (int i = 0; i < d.order(); ++i) d.set_label(i, "v" + std::to_string(i + 1));
}

// v_i -> v_j for j = i+1..i+k+1, j != i+k (indices mod 2k+1).
Digraph circulant_tk(int k) {
  const int n = 2 * k + 1;
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int step = 1; step <= k + 1; ++step)
      if (step != k) d.add_arc(i, mod(i + step, n));
  label_zero_based(d, n);
  return d;
}

// v_i -> v_j for j = i+1..i+k' (indices mod 2k'+1).
Digraph t_dagger(int kprime) {
  const int n = 2 * kprime + 1;
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int step = 1; step <= kprime; ++step) d.add_arc(i, mod(i + step, n));
  label_zero_based(d, n);
  return d;
}

Digraph extended_tk(int k, int n) {
  Digraph d = circulant_tk(k);
  // S = {v1..v_{k-1}, v_{k+1}} and v0 are dominated by V0; S' = {v_k,
  // v_{k+2}..v_{2k}} dominates V0.
  std::vector<Vertex> dominated{0};
  for (int i = 1; i <= k - 1; ++i) dominated.push_back(i);
  dominated.push_back(k + 1);
  std::vector<Vertex> dominating{k};
  for (int i = k + 2; i <= 2 * k; ++i) dominating.push_back(i);

  const int extra = n - 2 * k - 1;
  std::vector<Vertex> v0;
  for (int i = 1; i <= extra; ++i) v0.push_back(d.add_vertex("u" + std::to_string(i)));
  for (std::size_t i = 0; i < v0.size(); ++i)
    for (std::size_t j = i + 1; j < v0.size(); ++j) d.add_arc(v0[i], v0[j]);
  for (Vertex u : v0) {
    for (Vertex v : dominated) d.add_arc(u, v);
    for (Vertex w : dominating) d.add_arc(w, u);
  }
  if (n <= 12 && vertex_connectivity(d) != k)
    throw std::logic_error("extended_Tk construction lost connectivity " + std::to_string(k));
  return d;
}

Digraph t_prime(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i == 0 && j == n - 1)
        d.add_arc(n - 1, 0);
      else
        d.add_arc(i, j);
    }
  label_one_based(d);
  return d;
}

Digraph t_triple_prime(int n) {
  Digraph d(n);
  auto arc = [&](int i, int j) { d.add_arc(i - 1, j - 1); };  // 1-indexed
  arc(1, 2);
  arc(2, 3);
  arc(3, 1);
  for (int i = 4; i <= n; ++i)
    for (int j = 4; j < i; ++j) arc(i, j);
  arc(3, 4);
  arc(4, 1);
  arc(4, 2);
  for (int i = 5; i <= n; ++i) {
    arc(i, 3);
    arc(1, i);
    arc(2, i);
  }
  label_one_based(d);
  return d;
}

// Adds a vertex dominating v0..v_{k-1} and dominated by every other vertex.
void add_apex(Digraph& d, int k, const std::string& label) {
  const Vertex apex = d.add_vertex(label);
  for (Vertex v = 0; v < apex; ++v) {
    if (v < k)
      d.add_arc(apex, v);
    else
      d.add_arc(v, apex);
  }
}

Digraph t_star(int k, int n) {
  Digraph d = t_dagger((n - 2) / 2);
  add_apex(d, k, "v*");
  return d;
}

Digraph t_star_star(int k, int n) {
  Digraph d = t_dagger((n - 3) / 2);
  add_apex(d, k, "v*");
  add_apex(d, k, "v**");
  return d;
}

}  // namespace

std::string to_string(Family f) {
  for (const auto& entry : kFamilyNames)
    if (entry.family == f) return entry.name;
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (const auto& entry : kFamilyNames)
    if (name == entry.name) return entry.family;
  std::string known;
  for (const auto& entry : kFamilyNames) known += std::string(known.empty() ? "" : ", ") + entry.name;
  throw ParameterError("unknown family '" + name + "' (known: " + known + ")");
}

Digraph random_tournament(int n, Rng& rng) {
  if (n < 0) throw ParameterError("n must be non-negative");
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng() >> 63)
        d.add_arc(i, j);
      else
        d.add_arc(j, i);
    }
  return d;
}

Digraph random_semicomplete(int n, double digon_prob, Rng& rng) {
  if (!(digon_prob >= 0.0 && digon_prob <= 1.0))
    throw ParameterError("digon_prob must lie in [0, 1]");
  Digraph d = random_tournament(n, rng);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < digon_prob) {
        d.add_arc(i, j);
        d.add_arc(j, i);
      }
    }
  return d;
}

Digraph generate(const FamilySpec& spec) {
  const Family f = spec.family;
  switch (f) {
    case Family::Transitive: {
      const int n = require(spec.n, "n", f);
      ensure(n >= 1, "transitive needs n >= 1");
      return transitive(n);
    }
    case Family::CirculantTk: {
      const int k = require(spec.k, "k", f);
      ensure(k >= 1, "circulant_Tk needs k >= 1");
      return circulant_tk(k);
    }
    case Family::ExtendedTk: {
      const int k = require(spec.k, "k", f);
      const int n = require(spec.n, "n", f);
      ensure(k >= 3, "extended_Tk needs k >= 3");
      ensure(n >= 2 * k + 2, "extended_Tk needs n >= 2k+2");
      return extended_tk(k, n);
    }
    case Family::TPrime: {
      const int n = require(spec.n, "n", f);
      ensure(n >= 3, "Tprime needs n >= 3");
      return t_prime(n);
    }
    case Family::TTriplePrime: {
      const int n = require(spec.n, "n", f);
      ensure(n >= 5, "Ttripleprime needs n >= 5");
      return t_triple_prime(n);
    }
    case Family::TDagger: {
      const int kprime = require(spec.kprime, "kprime", f);
      ensure(kprime >= 1, "Tdag needs k' >= 1");
      return t_dagger(kprime);
    }
    case Family::TStar: {
      const int k = require(spec.k, "k", f);
      const int n = require(spec.n, "n", f);
      ensure(k >= 3, "Tstar needs k >= 3");
      ensure(n % 2 == 0, "Tstar needs even n");
      ensure(n >= 2 * k + 2, "Tstar needs n >= 2k+2");
      return t_star(k, n);
    }
    case Family::TStarStar: {
      const int k = require(spec.k, "k", f);
      const int n = require(spec.n, "n", f);
      ensure(k >= 3, "Tstarstar needs k >= 3");
      ensure(n % 2 == 1, "Tstarstar needs odd n");
      ensure(n >= 2 * k + 3, "Tstarstar needs n >= 2k+3");
      return t_star_star(k, n);
    }
    case Family::RandomTournament: {
      const int n = require(spec.n, "n", f);
      ensure(n >= 0, "random_tournament needs n >= 0");
      Rng rng(spec.seed);
      return random_tournament(n, rng);
    }
    case Family::RandomSemicomplete: {
      const int n = require(spec.n, "n", f);
      ensure(n >= 0, "random_semicomplete needs n >= 0");
      Rng rng(spec.seed);
      return random_semicomplete(n, spec.digon_prob, rng);
    }
  }
  throw ParameterError("unknown family");
}

Digraph chain_components(const std::vector<Digraph>& parts) {
  int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Classification c = classify(parts[i]);
    if (!c.is_strong || !c.is_semicomplete)
      throw InputError("chain part " + std::to_string(i) + " is not strong and semicomplete");
    total += parts[i].order();
  }
  Digraph d(total);
  const bool labeled = std::any_of(parts.begin(), parts.end(),
                                   [](const Digraph& p) { return p.has_labels(); });
  int offset = 0;
  for (const Digraph& part : parts) {
    for (auto [u, v] : part.arcs()) d.add_arc(offset + u, offset + v);
    if (labeled)
      for (Vertex v = 0; v < part.order(); ++v) d.set_label(offset + v, part.label(v));
    const int end = offset + part.order();
    for (Vertex u = offset; u < end; ++u)
      for (Vertex w = end; w < total; ++w) d.add_arc(u, w);
    offset = end;
  }
  return d;
}

Digraph pad_with_transitive(const Digraph& t, int total) {
  if (!classify(t).is_tournament) throw InputError("padding needs a tournament");
  if (total < t.order())
    throw InputError("target order " + std::to_string(total) + " is below |T| = " +
                     std::to_string(t.order()));
  Digraph d = t;
  const int base = t.order();
  for (int i = base; i < total; ++i) d.add_vertex(t.has_labels() ? "t" + std::to_string(i - base + 1) : "");
  for (Vertex u = 0; u < base; ++u)
    for (Vertex w = base; w < total; ++w) d.add_arc(u, w);
  for (Vertex u = base; u < total; ++u)
    for (Vertex w = u + 1; w < total; ++w) d.add_arc(u, w);
  return d;
}

}  // namespace safeset
