#include <doctest.h>

#include <cmath>

#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/rounding.hpp"
#include "surplus/spectral.hpp"
#include "surplus/structure.hpp"
#include "surplus/vectors.hpp"

using namespace surplus;

namespace {

// Circulant C16(1, 2): 4-regular, d^2/n = 1, and every distance-2 edge has
// codegree exactly 1.
Graph circulant_16() {
  std::vector<Edge> es;
  for (Vertex v = 0; v < 16; ++v) {
    es.push_back({v, (v + 1) % 16});
    es.push_back({v, (v + 2) % 16});
  }
  return Graph(16, es);
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double arcsin_sum(const Graph& g, const VectorAssignment& va) {
  double s = 0.0;
  for (const Edge& e : g.edges()) s += std::asin(std::clamp(cosine_similarity(va, e.u, e.v), -1.0, 1.0));
  return s;
}

}  // namespace

TEST_CASE("regular vectors on C5 match the closed form") {
  const Graph c5 = cycle(5);
  const auto p = RegularVectorParams::for_graph(c5, 1.0);
  CHECK(p.a == doctest::Approx(std::sqrt(2.0) / 3.0));
  const auto va = regular_vectors(c5, p);
  const double expected = -std::sqrt(2.0) + (0.5 + 2.0 * (std::sqrt(2.0) / 3.0) / std::sqrt(2.0) + 2.0 / 9.0) * (-0.8);
  for (const Edge& e : c5.edges()) {
    CHECK(rel_err(regular_edge_inner_product(c5, p, e.u, e.v), expected) <= 1e-12);
    CHECK(rel_err(va.dot(e.u, e.v), expected) <= 1e-12);
  }
}

TEST_CASE("closed form equals the dot product on regular graphs") {
  std::vector<Graph> graphs{paley(13), paley(17), petersen(), complete_bipartite(4, 4), circulant_16()};
  for (std::uint64_t seed = 0; seed < 5; ++seed) graphs.push_back(random_regular(20, 5, seed));
  for (const Graph& g : graphs) {
    for (double gamma : {1.0, 0.1}) {
      const auto p = RegularVectorParams::for_graph(g, gamma);
      const auto va = regular_vectors(g, p);
      for (const Edge& e : g.edges())
        CHECK(rel_err(va.dot(e.u, e.v), regular_edge_inner_product(g, p, e.u, e.v)) <= 1e-12);
    }
  }
}

TEST_CASE("edges with delta zero give -2 gamma / sqrt d") {
  const Graph g = circulant_16();
  const auto p = RegularVectorParams::for_graph(g, 0.5);
  const auto va = regular_vectors(g, p);
  const double expected = -2.0 * 0.5 / 2.0;
  std::size_t seen = 0;
  for (const Edge& e : g.edges()) {
    if (codegree(g, e.u, e.v) != 1) continue;
    ++seen;
    CHECK(regular_edge_inner_product(g, p, e.u, e.v) == expected);
    CHECK(va.dot(e.u, e.v) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(seen == 16);
}

TEST_CASE("regular vector preconditions") {
  CHECK_THROWS_AS(RegularVectorParams::for_graph(complete(200), 1.0), PreconditionError);
  CHECK_THROWS_AS(RegularVectorParams::for_graph(star(4), 1.0), PreconditionError);
  CHECK_NOTHROW(RegularVectorParams::for_graph(complete(50), 1.0));
}

TEST_CASE("srg_gamma regimes") {
  const SrgParams p13 = srg_params(paley(13));
  CHECK(p13.s == doctest::Approx(-10.0));
  const auto mid = srg_gamma(p13);
  CHECK(mid.regime == SrgRegime::balanced);
  CHECK(mid.gamma == 1e-6);
  CHECK(mid.edge_bound == doctest::Approx(-1e-6 / std::sqrt(6.0)));

  SrgParams lo = p13;
  const double band = 13.0 * std::pow(6.0, 1.5);
  lo.s = -2.0 * band;
  CHECK(srg_gamma(lo).regime == SrgRegime::many_fewer);
  CHECK(srg_gamma(lo).gamma == 1.0);
  SrgParams hi = p13;
  hi.s = 2.0 * band;
  CHECK(srg_gamma(hi).regime == SrgRegime::many_more);
  CHECK(srg_gamma(hi).gamma == doctest::Approx(0.5e-6).epsilon(1e-12));

  CHECK(p13.eta_from_s() == doctest::Approx(2.0));
  SrgParams bad = p13;
  bad.mu = 4;
  CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("srg_gamma edge inner products are negative and below the regime bound") {
  std::vector<Graph> graphs{petersen()};
  for (std::uint32_t q : {5u, 13u, 17u, 29u, 37u}) graphs.push_back(paley(q));
  for (const Graph& g : graphs) {
    const SrgParams sp = srg_params(g);
    const auto choice = srg_gamma(sp);
    const auto p = RegularVectorParams::for_graph(g, choice.gamma);
    const auto va = regular_vectors(g, p);
    for (const Edge& e : g.edges()) {
      const double ip = va.dot(e.u, e.v);
      CHECK(ip < 0.0);
      CHECK(ip <= choice.edge_bound * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("signed vectors") {
  // All codegrees of Paley(13) are at most 3 < 20 d^2/n.
  const Graph p = paley(13);
  const auto params = RegularVectorParams::for_graph(p, 0.1);
  const auto x = regular_vectors(p, params);
  const auto y = signed_vectors(p, params, 99);
  for (Vertex v = 0; v < 13; ++v)
    for (Vertex u = 0; u < 13; ++u) CHECK(x.get(v, u) == y.get(v, u));

  const Graph g = disjoint_union(complete(4), [] {
    Graph acc = complete_bipartite(3, 3);
    for (int i = 1; i < 15; ++i) acc = disjoint_union(acc, complete_bipartite(3, 3));
    return acc;
  }());
  REQUIRE(g.num_vertices() == 94);
  const auto gp = RegularVectorParams::for_graph(g, 0.1);
  const auto gx = regular_vectors(g, gp);
  std::size_t high = 0;
  for (const Edge& e : g.edges()) high += high_codegree(g, e.u, e.v);
  CHECK(high == 6);
  const double base = arcsin_sum(g, gx);
  double mean = 0.0;
  const int draws = 1000;
  for (int t = 0; t < draws; ++t) {
    const auto gy = signed_vectors(g, gp, static_cast<std::uint64_t>(t));
    for (Vertex v = 0; v < g.num_vertices(); v += 7) CHECK(gy.norm2(v) == doctest::Approx(gx.norm2(v)));
    mean += arcsin_sum(g, gy) - base;
  }
  mean /= draws;
  CHECK(mean <= sign_lemma_rhs(g, gp));

  CHECK_THROWS_AS(signed_vectors(g, RegularVectorParams::for_graph(g, 0.5), 1), PreconditionError);
  CHECK_THROWS_AS(signed_vectors(complete(6), RegularVectorParams::for_graph(complete(6), 0.1), 1),
                  PreconditionError);
}

TEST_CASE("c5 bucket vectors") {
  const Graph pet = petersen();
  const auto sets = c5_bucket_sets(pet, 1.0);
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(sets.S[v].size() == 6);
    for (Vertex u : sets.S[v]) CHECK_FALSE(pet.adjacent(u, v));
  }
  const auto va = c5_bucket_vectors(pet, sets);
  for (const Edge& e : pet.edges()) {
    const auto ip = c5_inner_product(pet, sets, e.u, e.v);
    CHECK(rel_err(va.dot(e.u, e.v), ip.value) <= 1e-12);
  }

  std::vector<Graph> graphs{pet, paley(13), blowup(cycle(5), 4), blowup(cycle(7), 3), random_regular(30, 6, 4)};
  for (const Graph& g : graphs)
    for (double s : {1.0, 2.0, 4.0}) {
      const auto v = c5_bucket_vectors(g, s);
      for (Vertex u = 0; u < g.num_vertices(); ++u) CHECK(v.norm2(u) <= 2.0 + 1e-12);
    }

  const Graph c = blowup(cycle(7), 2);
  const auto empty = c5_bucket_sets(c, 100.0);
  CHECK(empty.all_empty());
  const auto ev = c5_bucket_vectors(c, empty);
  for (Vertex v = 0; v < c.num_vertices(); ++v)
    for (Vertex u = 0; u < c.num_vertices(); ++u)
      CHECK(ev.get(v, u) == (c.adjacent(u, v) ? -1.0 / 2.0 : 0.0));
  CHECK_THROWS_AS(c5_bucket_vectors(star(3), 1.0), PreconditionError);
}

TEST_CASE("c5 bucket intersection sum is bounded by homomorphisms on C5-free graphs") {
  std::vector<Graph> graphs{complete(4), disjoint_union(complete(4), complete(4)), complete_bipartite(3, 3),
                            cycle(6), blowup(cycle(7), 2), blowup(cycle(7), 3), polarity(2)};
  for (const Graph& g : graphs)
    for (double s : {1.0, 2.0, 4.0}) {
      const auto sets = c5_bucket_sets(g, s);
      std::uint64_t sum = 0;
      for (const Edge& e : g.edges()) sum += sorted_intersection_size(sets.S[e.u], sets.S[e.v]);
      CHECK(static_cast<double>(sum) <= static_cast<double>(hom_count_c5(g)) / (s * s));
    }
}

TEST_CASE("odd cycle S/T vectors on Petersen") {
  const Graph pet = petersen();
  const auto prof = good_path_profile(pet, 5, 3);
  REQUIRE(prof.q == 2);
  const auto sets = st_sets(pet, prof, 2);
  const auto va = odd_cycle_st_vectors(pet, sets, 2);
  const auto prods = odd_cycle_edge_products(pet, sets);
  const auto edges = pet.edges();
  REQUIRE(prods.size() == edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    CHECK(va.dot(edges[i].u, edges[i].v) == doctest::Approx(prods[i].b - prods[i].a).epsilon(1e-12));
  const double d = 3.0;
  for (Vertex u = 0; u < 10; ++u) {
    if (prof.layer[u] != 1 && prof.layer[u] != 2) {
      for (Vertex w = 0; w < 10; ++w) CHECK(va.get(u, w) == 0.0);
    }
    const double t_part = sets.T[u].size() * sets.s_prime / d;
    const double s_part = sets.S[u].size() * sets.s / (d * d);
    CHECK(va.norm2(u) == doctest::Approx(t_part + s_part));
    CHECK(t_part <= 1.0 + 1e-12);
    CHECK(s_part <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(odd_cycle_st_vectors(pet, sets, 3), UsageError);
}
