#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "surplus/buckets.hpp"
#include "surplus/graph.hpp"
#include "surplus/rounding.hpp"

namespace surplus {

// x^v_v = 1 + gamma a, x^v_u = -gamma/sqrt(d) on N(v), gamma a elsewhere,
// with a = sqrt(d)/(n-d).
struct RegularVectorParams {
  double gamma = 1.0;
  double a = 0.0;
  double d = 0.0;
  std::size_t n = 0;

  // Requires g regular with d/n <= 0.99 and 0 < gamma <= 1.
  static RegularVectorParams for_graph(const Graph& g, double gamma);
};

VectorAssignment regular_vectors(const Graph& g, const RegularVectorParams& p);
// -2 gamma/sqrt(d) + gamma^2 (1/d + 2a/sqrt(d) + a^2) delta(u,v) for an edge uv.
double regular_edge_inner_product(const Graph& g, const RegularVectorParams& p, Vertex u, Vertex v);

struct SrgParams {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t eta = 0;  // common neighbours of adjacent pairs
  std::size_t mu = 0;   // common neighbours of non-adjacent pairs
  double s = 0.0;       // t(G) - d^3/6

  // eta = d^2/n + 6s/(nd)
  double eta_from_s() const;
  // Throws UsageError unless n d(d-1) = n d eta + (n(n-1) - n d) mu.
  void validate() const;
};

enum class SrgRegime { many_fewer, balanced, many_more };
std::string_view to_string(SrgRegime r);
SrgRegime srg_regime(const SrgParams& p);

struct GammaChoice {
  double gamma = 0.0;
  SrgRegime regime = SrgRegime::balanced;
  double edge_bound = 0.0;  // upper bound on every edge inner product
};

// gamma = 1 when s < -n d^{3/2}, small_gamma in the middle band and
// small_gamma n d^{3/2}/s when s > n d^{3/2}.  Requires d <= 0.99 n.
GammaChoice srg_gamma(const SrgParams& p, double small_gamma = 1e-6);

// True when d(u,v) > 20 d^2/n.
bool high_codegree(const Graph& g, Vertex u, Vertex v);

// regular_vectors with the sign of coordinate u of y^v drawn from
// derive_seed(seed, v, u) on every high-codegree neighbour u.  Requires
// gamma <= 1/10 and d <= n/2.
VectorAssignment signed_vectors(const Graph& g, const RegularVectorParams& p, std::uint64_t seed);
// gamma n sqrt(d)/4 - gamma^2 sum over high-codegree edges of d(u,v)/(10d).
double sign_lemma_rhs(const Graph& g, const RegularVectorParams& p);

// S(v) = {u != v : s <= d(u,v) < 2s}.  nu counts ordered paths uvw with
// d(u,w) in the window, divided by n d^2.
BucketSets c5_bucket_sets(const Graph& g, double s);
// -1/sqrt(d) on N(v) and sqrt(s)/d on S(v), summed where they overlap.
// Requires g regular and s >= 1.
VectorAssignment c5_bucket_vectors(const Graph& g, double s);
VectorAssignment c5_bucket_vectors(const Graph& g, const BucketSets& sets);

struct C5InnerProduct {
  std::size_t nn = 0;  // |N(u) & N(v)|
  std::size_t ss = 0;  // |S(u) & S(v)|
  std::size_t ns = 0;  // |N(u) & S(v)|
  std::size_t sn = 0;  // |S(u) & N(v)|
  double value = 0.0;  // nn/d + ss s/d^2 - (ns + sn) sqrt(s)/d^{3/2}
};
C5InnerProduct c5_inner_product(const Graph& g, const BucketSets& sets, Vertex u, Vertex v);

// -(s'/d^{q-1})^{1/2} on T(u) and (s/d^q)^{1/2} on S(u); zero elsewhere.
VectorAssignment odd_cycle_st_vectors(const Graph& g, const BucketSets& sets, unsigned q);
// Per edge: a = (|T(u)&S(v)| + |S(u)&T(v)|)(s s')^{1/2}/d^{q-1/2},
// b = |T(u)&T(v)| s'/d^{q-1} + |S(u)&S(v)| s/d^q, so <x^u,x^v> = b - a.
std::vector<EdgeProduct> odd_cycle_edge_products(const Graph& g, const BucketSets& sets);

}  // namespace surplus
