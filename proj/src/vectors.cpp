#include "surplus/vectors.hpp"

#include <algorithm>
#include <cmath>

#include "surplus/errors.hpp"
#include "surplus/rng.hpp"

namespace surplus {

std::string_view to_string(BucketKind k) {
  return k == BucketKind::c5_codegree ? "c5_codegree" : "odd_cycle";
}

bool BucketSets::all_empty() const {
  return std::all_of(S.begin(), S.end(), [](const auto& x) { return x.empty(); });
}

std::vector<std::vector<Vertex>> BucketSets::s_preimages() const {
  std::vector<std::vector<Vertex>> inv(S.size());
  for (Vertex u = 0; u < S.size(); ++u)
    for (Vertex w : S[u]) inv[w].push_back(u);
  return inv;
}

std::size_t sorted_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

RegularVectorParams RegularVectorParams::for_graph(const Graph& g, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw UsageError("gamma must lie in (0, 1]");
  require(g.num_vertices() >= 2, "regular vectors need at least two vertices");
  require(is_regular(g), "graph is not regular");
  RegularVectorParams p;
  p.gamma = gamma;
  p.n = g.num_vertices();
  p.d = static_cast<double>(g.degree(0));
  require(p.d <= 0.99 * static_cast<double>(p.n), "degree exceeds 0.99 n");
  p.a = std::sqrt(p.d) / (static_cast<double>(p.n) - p.d);
  return p;
}

namespace {

void check_params(const Graph& g, const RegularVectorParams& p) {
  require(is_regular(g), "graph is not regular");
  require(p.n == g.num_vertices(), "vector parameters built for a different vertex count");
  require(g.num_vertices() == 0 || static_cast<double>(g.degree(0)) == p.d,
          "vector parameters built for a different degree");
  require(p.d < static_cast<double>(p.n), "degree must be below n");
  if (!(p.gamma > 0.0 && p.gamma <= 1.0)) throw UsageError("gamma must lie in (0, 1]");
}

VectorAssignment build_regular(const Graph& g, const RegularVectorParams& p, std::string label,
                               const std::uint64_t* seed) {
  check_params(g, p);
  const std::size_t n = g.num_vertices();
  const double off = p.gamma * p.a;
  const double nb = -p.gamma / std::sqrt(p.d);
  const double twenty_d2_n = 20.0 * p.d * p.d / static_cast<double>(n);
  const auto& cg = g.codegrees();
  VectorAssignment va(n, n, std::move(label));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) va.set(v, u, u == v ? 1.0 + off : off);
    for (Vertex u : g.neighbors(v)) {
      double x = nb;
      if (seed && static_cast<double>(cg.codegree(u, v)) > twenty_d2_n) {
        Rng rng(derive_seed(*seed, v, u));
        if (rng() & 1U) x = -nb;
      }
      va.set(v, u, x);
    }
  }
  return va;
}

}  // namespace

VectorAssignment regular_vectors(const Graph& g, const RegularVectorParams& p) {
  return build_regular(g, p, "regular", nullptr);
}

double regular_edge_inner_product(const Graph& g, const RegularVectorParams& p, Vertex u, Vertex v) {
  const double rd = std::sqrt(p.d);
  const double delta = static_cast<double>(codegree(g, u, v)) - p.d * p.d / static_cast<double>(p.n);
  return -2.0 * p.gamma / rd + p.gamma * p.gamma * (1.0 / p.d + 2.0 * p.a / rd + p.a * p.a) * delta;
}

double SrgParams::eta_from_s() const {
  const double nn = static_cast<double>(n), dd = static_cast<double>(d);
  return dd * dd / nn + 6.0 * s / (nn * dd);
}

void SrgParams::validate() const {
  const std::uint64_t lhs = static_cast<std::uint64_t>(n) * d * (d - 1);
  const std::uint64_t rhs =
      static_cast<std::uint64_t>(n) * d * eta + (static_cast<std::uint64_t>(n) * (n - 1) - n * d) * mu;
  if (d == 0 || d >= n || lhs != rhs)
    throw UsageError("strongly regular parameters violate the double-counting identity");
}

std::string_view to_string(SrgRegime r) {
  switch (r) {
    case SrgRegime::many_fewer: return "many_fewer";
    case SrgRegime::balanced: return "balanced";
    case SrgRegime::many_more: return "many_more";
  }
  return "?";
}

SrgRegime srg_regime(const SrgParams& p) {
  const double band = static_cast<double>(p.n) * std::pow(static_cast<double>(p.d), 1.5);
  if (p.s < -band) return SrgRegime::many_fewer;
  if (p.s > band) return SrgRegime::many_more;
  return SrgRegime::balanced;
}

GammaChoice srg_gamma(const SrgParams& p, double small_gamma) {
  require(static_cast<double>(p.d) <= 0.99 * static_cast<double>(p.n), "degree exceeds 0.99 n");
  if (!(small_gamma > 0.0 && small_gamma <= 1.0)) throw UsageError("gamma must lie in (0, 1]");
  const double n = static_cast<double>(p.n), d = static_cast<double>(p.d);
  GammaChoice c;
  c.regime = srg_regime(p);
  switch (c.regime) {
    case SrgRegime::many_fewer:
      c.gamma = 1.0;
      c.edge_bound = 6.0 * p.s / (n * d * d);
      break;
    case SrgRegime::balanced:
      c.gamma = small_gamma;
      c.edge_bound = -small_gamma / std::sqrt(d);
      break;
    case SrgRegime::many_more:
      c.gamma = small_gamma * n * std::pow(d, 1.5) / p.s;
      c.edge_bound = -small_gamma * n * d / p.s;
      break;
  }
  return c;
}

bool high_codegree(const Graph& g, Vertex u, Vertex v) {
  const double n = static_cast<double>(g.num_vertices());
  const double d = average_degree(g);
  return static_cast<double>(codegree(g, u, v)) > 20.0 * d * d / n;
}

VectorAssignment signed_vectors(const Graph& g, const RegularVectorParams& p, std::uint64_t seed) {
  require(p.gamma <= 0.1, "signed vectors need gamma <= 1/10");
  require(2.0 * p.d <= static_cast<double>(p.n), "signed vectors need d <= n/2");
  return build_regular(g, p, "signed", &seed);
}

double sign_lemma_rhs(const Graph& g, const RegularVectorParams& p) {
  double high = 0.0;
  for (const Edge& e : g.edges())
    if (high_codegree(g, e.u, e.v)) high += static_cast<double>(codegree(g, e.u, e.v)) / (10.0 * p.d);
  return p.gamma * static_cast<double>(p.n) * std::sqrt(p.d) / 4.0 - p.gamma * p.gamma * high;
}

BucketSets c5_bucket_sets(const Graph& g, double s) {
  if (!(s >= 1.0)) throw UsageError("bucket base s must be at least 1");
  const std::size_t n = g.num_vertices();
  BucketSets b;
  b.kind = BucketKind::c5_codegree;
  b.S.assign(n, {});
  b.s = s;
  b.s_prime = s;
  b.q = 2;
  b.d = average_degree(g);
  b.max_degree = degree_stats(g).max;
  double paths = 0.0;
  for (const auto& [u, w, c] : g.codegrees().pairs()) {
    const double x = static_cast<double>(c);
    if (x >= s && x < 2.0 * s) {
      b.S[u].push_back(w);
      b.S[w].push_back(u);
      paths += 2.0 * x;
    }
  }
  for (auto& row : b.S) std::sort(row.begin(), row.end());
  b.nu = n == 0 || b.d == 0.0 ? 0.0 : paths / (static_cast<double>(n) * b.d * b.d);
  return b;
}

VectorAssignment c5_bucket_vectors(const Graph& g, double s) { return c5_bucket_vectors(g, c5_bucket_sets(g, s)); }

VectorAssignment c5_bucket_vectors(const Graph& g, const BucketSets& sets) {
  require(is_regular(g), "graph is not regular");
  require(sets.size() == g.num_vertices(), "bucket sets built for a different graph");
  const std::size_t n = g.num_vertices();
  const double d = n ? static_cast<double>(g.degree(0)) : 0.0;
  require(d > 0.0, "graph has no edges");
  const double nb = -1.0 / std::sqrt(d);
  const double sv = std::sqrt(sets.s) / d;
  VectorAssignment va(n, n, "c5-bucket");
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) va.set(v, u, nb);
    for (Vertex u : sets.S[v]) va.set(v, u, va.get(v, u) + sv);
  }
  return va;
}

C5InnerProduct c5_inner_product(const Graph& g, const BucketSets& sets, Vertex u, Vertex v) {
  const double d = static_cast<double>(g.degree(u));
  C5InnerProduct r;
  r.nn = sorted_intersection_size(g.neighbors(u), g.neighbors(v));
  r.ss = sorted_intersection_size(sets.S[u], sets.S[v]);
  r.ns = sorted_intersection_size(g.neighbors(u), sets.S[v]);
  r.sn = sorted_intersection_size(sets.S[u], g.neighbors(v));
  r.value = static_cast<double>(r.nn) / d + static_cast<double>(r.ss) * sets.s / (d * d) -
            static_cast<double>(r.ns + r.sn) * std::sqrt(sets.s) / std::pow(d, 1.5);
  return r;
}

VectorAssignment odd_cycle_st_vectors(const Graph& g, const BucketSets& sets, unsigned q) {
  if (q < 2 || q != sets.q) throw UsageError("level q out of range for these S/T sets");
  require(sets.size() == g.num_vertices() && sets.T.size() == g.num_vertices(),
          "S/T sets built for a different graph");
  require(sets.d > 0.0, "graph has no edges");
  const std::size_t n = g.num_vertices();
  const double tv = -std::sqrt(sets.s_prime / std::pow(sets.d, q - 1.0));
  const double sv = std::sqrt(sets.s / std::pow(sets.d, static_cast<double>(q)));
  VectorAssignment va(n, n, "odd-cycle-st");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : sets.T[u]) va.set(u, w, tv);
    for (Vertex w : sets.S[u]) va.set(u, w, va.get(u, w) + sv);
  }
  return va;
}

std::vector<EdgeProduct> odd_cycle_edge_products(const Graph& g, const BucketSets& sets) {
  const double q = sets.q;
  const double a_scale = std::sqrt(sets.s * sets.s_prime) / std::pow(sets.d, q - 0.5);
  const double t_scale = sets.s_prime / std::pow(sets.d, q - 1.0);
  const double s_scale = sets.s / std::pow(sets.d, q);
  std::vector<EdgeProduct> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const auto ts = sorted_intersection_size(sets.T[e.u], sets.S[e.v]);
    const auto st = sorted_intersection_size(sets.S[e.u], sets.T[e.v]);
    const auto tt = sorted_intersection_size(sets.T[e.u], sets.T[e.v]);
    const auto ss = sorted_intersection_size(sets.S[e.u], sets.S[e.v]);
    out.push_back({static_cast<double>(ts + st) * a_scale,
                   static_cast<double>(tt) * t_scale + static_cast<double>(ss) * s_scale});
  }
  return out;
}

}  // namespace surplus
