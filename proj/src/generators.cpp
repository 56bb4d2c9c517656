#include "surplus/generators.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "surplus/errors.hpp"
#include "surplus/rng.hpp"

namespace surplus {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  need(n >= 1, "gnp: n must be positive");
  need(p >= 0.0 && p <= 1.0, "gnp: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph triangle_free_gnp(std::size_t n, double p, std::uint64_t seed) {
  const Graph g = gnp(n, p, seed);
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> bits(n * words);
  for (Vertex v = 0; v < n; ++v) std::copy(g.row(v).begin(), g.row(v).end(), bits.begin() + v * words);
  std::vector<Edge> kept;
  for (auto e : g.edges()) {
    std::span<const std::uint64_t> ru(bits.data() + e.u * words, words), rv(bits.data() + e.v * words, words);
    if (popcount_and(ru, rv) == 0) {
      kept.push_back(e);
    } else {
      bits[e.u * words + (e.v >> 6)] &= ~(std::uint64_t{1} << (e.v & 63));
      bits[e.v * words + (e.u >> 6)] &= ~(std::uint64_t{1} << (e.u & 63));
    }
  }
  return Graph(n, kept);
}

Graph paley(std::uint32_t q) {
  need(q <= 10000 && is_prime(q) && q % 4 == 1, "paley: q must be a prime = 1 mod 4, at most 10^4");
  std::vector<std::uint8_t> residue(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) residue[x * x % q] = 1;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v)
      if (residue[v - u]) edges.push_back({u, v});
  return Graph(q, edges);
}

Graph polarity(std::uint32_t q) {
  need(q <= 101 && is_prime(q), "polarity: q must be a prime at most 101");
  std::vector<std::array<std::uint32_t, 3>> pts;
  pts.push_back({0, 0, 1});
  for (std::uint32_t b = 0; b < q; ++b) pts.push_back({0, 1, b});
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) pts.push_back({1, a, b});
  std::vector<Edge> edges;
  for (Vertex i = 0; i < pts.size(); ++i)
    for (Vertex j = i + 1; j < pts.size(); ++j) {
      const auto& x = pts[i];
      const auto& y = pts[j];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) edges.push_back({i, j});
    }
  return Graph(pts.size(), edges);
}

Graph blowup(const Graph& h, std::size_t s) {
  need(s >= 1, "blowup: s must be positive");
  std::vector<Edge> edges;
  for (auto e : h.edges())
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        edges.push_back({static_cast<Vertex>(e.u * s + i), static_cast<Vertex>(e.v * s + j)});
  return Graph(h.num_vertices() * s, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  need(n >= 3, "cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, edges);
}

Graph path(std::size_t n) {
  need(n >= 1, "path: n must be positive");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  return Graph(a + b, edges);
}

Graph complete_multipartite(std::size_t parts, std::size_t size) { return blowup(complete(parts), size); }

Graph bipartite_random(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  need(p >= 0.0 && p <= 1.0, "bipartite_random: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v)
      if (rng.uniform() < p) edges.push_back({u, static_cast<Vertex>(a + v)});
  return Graph(a + b, edges);
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  need(d < n, "random_regular: need d < n");
  need((n * d) % 2 == 0, "random_regular: n*d must be even");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
    bool failed = false;
    while (!stubs.empty() && !failed) {
      // Shuffle, pair consecutive stubs, keep suitable pairs, retry the rest.
      for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng.below(i)]);
      std::vector<Vertex> rest;
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        Vertex a = stubs[i], b = stubs[i + 1];
        if (a > b) std::swap(a, b);
        if (a != b && !edges.count({a, b})) {
          edges.insert({a, b});
        } else {
          rest.push_back(a);
          rest.push_back(b);
        }
      }
      if (rest.size() == stubs.size()) {
        // No progress: give up unless some suitable pair remains.
        bool suitable = false;
        for (std::size_t i = 0; i < rest.size() && !suitable; ++i)
          for (std::size_t j = i + 1; j < rest.size() && !suitable; ++j) {
            const Vertex a = std::min(rest[i], rest[j]), b = std::max(rest[i], rest[j]);
            suitable = a != b && !edges.count({a, b});
          }
        failed = !suitable;
      }
      stubs.swap(rest);
    }
    if (failed) continue;
    std::vector<Edge> out;
    for (auto [a, b] : edges) out.push_back({a, b});
    return Graph(n, out);
  }
  throw Error("random_regular: pairing did not succeed in 1000 attempts");
}

// ---- spec parsing ---------------------------------------------------------

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  std::size_t arity;
  bool random;
};

constexpr std::array<FamilyInfo, 14> kFamilies{{
    {Family::gnp, "gnp", 2, true},
    {Family::triangle_free, "triangle_free", 2, true},
    {Family::paley, "paley", 1, false},
    {Family::polarity, "polarity", 1, false},
    {Family::complete, "complete", 1, false},
    {Family::cycle, "cycle", 1, false},
    {Family::path, "path", 1, false},
    {Family::star, "star", 1, false},
    {Family::petersen, "petersen", 0, false},
    {Family::complete_bipartite, "complete_bipartite", 2, false},
    {Family::multipartite, "multipartite", 2, false},
    {Family::bipartite_random, "bipartite_random", 3, true},
    {Family::random_regular, "random_regular", 2, true},
    {Family::blowup, "blowup", 1, false},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw UsageError("unknown family");
}

std::string format_number(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

std::size_t as_count(double x, const char* what) {
  if (!(x >= 0) || x != std::floor(x) || x > 1e9) throw UsageError(std::string(what) + " must be a non-negative integer");
  return static_cast<std::size_t>(x);
}

GeneratorSpec parse_tokens(const std::vector<std::string>& tok, std::size_t& pos, std::uint64_t seed) {
  if (pos >= tok.size()) throw UsageError("generator spec: missing family name");
  const std::string& name = tok[pos++];
  const FamilyInfo* fi = nullptr;
  for (const auto& i : kFamilies)
    if (name == i.name) fi = &i;
  if (!fi) throw UsageError("generator spec: unknown family '" + name + "'");
  GeneratorSpec spec;
  spec.family = fi->family;
  spec.seed = seed;
  for (std::size_t k = 0; k < fi->arity; ++k) {
    if (pos >= tok.size()) throw UsageError(std::string("generator spec: ") + fi->name + " needs " + std::to_string(fi->arity) + " parameter(s)");
    double x = 0;
    const auto& t = tok[pos++];
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc() || p != t.data() + t.size()) throw UsageError("generator spec: bad number '" + t + "'");
    spec.params.push_back(x);
  }
  if (spec.family == Family::blowup) spec.base = std::make_shared<GeneratorSpec>(parse_tokens(tok, pos, seed));
  return spec;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tok;
  std::uint64_t seed = 0;
  for (std::string t; in >> t;) {
    if (t.rfind("seed=", 0) == 0) {
      auto [p, ec] = std::from_chars(t.data() + 5, t.data() + t.size(), seed);
      if (ec != std::errc() || p != t.data() + t.size()) throw UsageError("generator spec: bad seed '" + t + "'");
    } else {
      tok.push_back(t);
    }
  }
  std::size_t pos = 0;
  GeneratorSpec spec = parse_tokens(tok, pos, seed);
  if (pos != tok.size()) throw UsageError("generator spec: trailing token '" + tok[pos] + "'");
  return spec;
}

bool GeneratorSpec::randomized() const {
  return info(family).random || (base && base->randomized());
}

namespace {

std::string spec_body(const GeneratorSpec& g) {
  std::string s = info(g.family).name;
  for (double x : g.params) s += " " + format_number(x);
  if (g.base) s += " " + spec_body(*g.base);
  return s;
}

}  // namespace

std::string GeneratorSpec::to_string() const {
  std::string s = spec_body(*this);
  if (randomized()) s += " seed=" + std::to_string(seed);
  return s;
}

Graph generate(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::gnp: return gnp(as_count(p[0], "n"), p[1], spec.seed);
    case Family::triangle_free: return triangle_free_gnp(as_count(p[0], "n"), p[1], spec.seed);
    case Family::paley: return paley(static_cast<std::uint32_t>(as_count(p[0], "q")));
    case Family::polarity: return polarity(static_cast<std::uint32_t>(as_count(p[0], "q")));
    case Family::complete: return complete(as_count(p[0], "n"));
    case Family::cycle: return cycle(as_count(p[0], "n"));
    case Family::path: return path(as_count(p[0], "n"));
    case Family::star: return star(as_count(p[0], "leaves"));
    case Family::petersen: return petersen();
    case Family::complete_bipartite: return complete_bipartite(as_count(p[0], "a"), as_count(p[1], "b"));
    case Family::multipartite: return complete_multipartite(as_count(p[0], "parts"), as_count(p[1], "size"));
    case Family::bipartite_random:
      return bipartite_random(as_count(p[0], "a"), as_count(p[1], "b"), p[2], spec.seed);
    case Family::random_regular: return random_regular(as_count(p[0], "n"), as_count(p[1], "d"), spec.seed);
    case Family::blowup: {
      GeneratorSpec inner = *spec.base;
      inner.seed = spec.seed;
      return blowup(generate(inner), as_count(p[0], "s"));
    }
  }
  throw UsageError("unknown family");
}

}  // namespace surplus
