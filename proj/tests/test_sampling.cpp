#include <doctest.h>

#include <cmath>

#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/oracle.hpp"
#include "surplus/sampling.hpp"
#include "surplus/structure.hpp"
#include "surplus/vectors.hpp"

using namespace surplus;

namespace {

void check_chain(const SamplingCutResult& r) {
  REQUIRE(r.per_trial.size() == r.trials);
  for (const auto& t : r.per_trial) CHECK(2 * t.surplus.twice() >= 2 * (t.x - t.y - t.z));
  CHECK(r.cut.crossing() == r.per_trial[r.best_trial].crossing);
  for (const auto& t : r.per_trial) CHECK(t.crossing <= r.cut.crossing());
}

void check_disjoint(std::size_t n, const SamplingCutResult& r) {
  std::vector<int> seen(n, 0);
  for (const auto& a : r.a_parts)
    for (Vertex v : a) ++seen[v];
  for (const auto& b : r.b_parts)
    for (Vertex v : b) ++seen[v];
  for (int c : seen) CHECK(c <= 1);
}

}  // namespace

TEST_CASE("triangle sampling on Petersen has Y = 0 with one centre") {
  const Graph pet = petersen();
  const auto r = triangle_sampling_cut(pet, 0.1, std::nullopt, 4, 300);
  CHECK(r.plan.k == 1);
  CHECK(r.plan.p == doctest::Approx(3.0 / 30.0));
  for (const auto& t : r.per_trial) CHECK(t.y == 0);
  check_chain(r);
  check_disjoint(10, r);
  CHECK(r.cut.surplus().twice() >= 0);
}

TEST_CASE("triangle sampling on K_{t,t}") {
  for (std::size_t t : {4u, 6u, 10u}) {
    const Graph g = complete_bipartite(t, t);
    const auto r = triangle_sampling_cut(g, 0.1, std::nullopt, t, 64);
    check_chain(r);
    CHECK(r.cut.surplus().twice() > 0);
  }
}

TEST_CASE("triangle sampling chain on random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_regular(40, 6, seed);
    const auto r = triangle_sampling_cut(g, 0.5, 1.0, seed, 32);
    check_chain(r);
    check_disjoint(40, r);
  }
  CHECK_THROWS_AS(triangle_sampling_cut(star(5), 0.1, 1.0, 0, 4), PreconditionError);
  CHECK_THROWS_AS(triangle_sampling_cut(Graph(5, {}), 0.1, std::nullopt, 0, 4), PreconditionError);
}

TEST_CASE("bucket sampling with disjoint singleton sets has Y = 0") {
  const Graph g = random_regular(30, 4, 2);
  BucketSets sets = c5_bucket_sets(g, 1.0);
  for (Vertex v = 0; v < 30; ++v) sets.S[v] = {static_cast<Vertex>((v + 1) % 30)};
  const auto r = bucket_neighborhood_cut(g, sets, 5, 200);
  for (const auto& t : r.per_trial) CHECK(t.y == 0);
  check_chain(r);
}

TEST_CASE("bucket sampling on Petersen with s = 1") {
  const Graph pet = petersen();
  const auto r = bucket_neighborhood_cut(pet, c5_bucket_sets(pet, 1.0), 8, 1000);
  CHECK(r.trials == 1000);
  check_chain(r);
  check_disjoint(10, r);
}

TEST_CASE("bucket sampling expectation on blowups matches the exact value") {
  // With one centre, A_1 is the label-0 part of the S-preimage P of v_1, so
  // E[X - Y - Z] = mean over v_1 of (p/3) e(P, V - P) + (2p/3 - 1/9) e(P) - p^2 m.
  auto exact = [](const Graph& g, const BucketSets& sets, double p) {
    const auto pre = sets.s_preimages();
    double total = 0.0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      VertexSet in(g.num_vertices());
      for (Vertex u : pre[v]) in.set(u);
      double inside = 0.0, boundary = 0.0;
      for (Vertex u : pre[v])
        for (Vertex w : g.neighbors(u)) (in.test(w) ? inside : boundary) += 1.0;
      inside /= 2.0;
      total += p / 3.0 * boundary + (2.0 * p / 3.0 - 1.0 / 9.0) * inside;
    }
    return total / static_cast<double>(g.num_vertices()) - p * p * static_cast<double>(g.num_edges());
  };
  for (std::size_t len : {5u, 7u}) {
    const Graph g = blowup(cycle(len), 4);
    const auto bucket = dyadic_codegree_bucket(g);
    CHECK(bucket.s == 4);
    const auto sets = c5_bucket_sets(g, static_cast<double>(bucket.s));
    const auto r = bucket_neighborhood_cut(g, sets, 21, 1000);
    check_chain(r);
    REQUIRE(r.plan.k == 1);
    double mean = 0.0, sq = 0.0;
    for (const auto& t : r.per_trial) {
      const double v = static_cast<double>(t.x - t.y - t.z);
      mean += v;
      sq += v * v;
    }
    mean /= static_cast<double>(r.trials);
    const double se = std::sqrt((sq / r.trials - mean * mean) / (r.trials - 1.0));
    const double expected = exact(g, sets, r.plan.p);
    INFO("cycle length " << len << ", mean " << mean << ", exact " << expected);
    CHECK(std::abs(mean - expected) <= 4.0 * se);
    // blowup(C5, 4) contains C5: the two classes of each preimage are adjacent.
    if (len == 5) CHECK(expected < 0.0);
    if (len == 7) {
      CHECK(expected > 0.0);
      CHECK(mean > 0.0);
      for (const auto& t : r.per_trial) CHECK(t.y == 0);
    }
  }
}

TEST_CASE("bucket sampling plan") {
  const Graph g = blowup(cycle(7), 4);
  const auto sets = c5_bucket_sets(g, 4.0);
  const auto plan = bucket_sampling_plan(g, sets);
  const double n = 28.0, d = 8.0;
  CHECK(plan.k == static_cast<std::size_t>(std::ceil(4.0 * n / (2.0 * d * d))));
  if (!plan.clamped) CHECK(plan.p == doctest::Approx(sets.nu * d * d / (10.0 * 4.0 * n)));
  CHECK(plan.k * plan.p <= 2.0 / 3.0 + 1e-12);
  BucketSets none = sets;
  for (auto& s : none.S) s.clear();
  CHECK_THROWS_AS(bucket_neighborhood_cut(g, none, 1, 4), PreconditionError);
}

TEST_CASE("sparse set cut") {
  const Graph c4 = cycle(4);
  const auto r = sparse_set_cut(c4, {0, 2}, 3, 100);
  CHECK(r.target == doctest::Approx(0.5));
  CHECK(r.cut.surplus().value() >= 0.5);

  const Graph pet = petersen();
  std::vector<Vertex> all(10);
  for (Vertex v = 0; v < 10; ++v) all[v] = v;
  const auto full = sparse_set_cut(pet, all, 1, 10);
  CHECK(full.target == doctest::Approx(0.0));
  CHECK(full.cut.surplus().twice() >= 0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_regular(24, 4, seed);
    const std::vector<Vertex> S{0, 3, 5, 8, 13, 21};
    const auto out = sparse_set_cut(g, S, seed, 64);
    CHECK(out.cut.surplus().twice() >= 0);
    CHECK(out.cut.surplus().value() >= 0.5 * static_cast<double>(out.best_q) - 1e-12);
  }
  CHECK_THROWS_AS(sparse_set_cut(c4, {}, 1, 4), UsageError);
  CHECK_THROWS_AS(sparse_set_cut(star(3), {0}, 1, 4), PreconditionError);
}

TEST_CASE("codegree trimming") {
  const Graph tf = blowup(cycle(7), 3);
  const auto r = codegree_trimming_cut(tf, 1);
  CHECK(r.fallback);
  CHECK(r.e_h == 0);
  CHECK_FALSE(r.reason.empty());

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_regular(40, 8, seed);
    const auto t = codegree_trimming_cut(g, seed);
    CHECK(t.e_h == 3 * triangle_count(g));
    CHECK(t.cut.surplus().twice() > 0);
    if (!t.fallback) {
      CHECK(t.target_met);
      for (Vertex v : t.S) CHECK(g.adjacent(t.w, v));
      CHECK(static_cast<double>(t.e_s) <= t.slice_bound + 1e-9);
    }
  }
  CHECK_THROWS_AS(codegree_trimming_cut(blowup(complete(3), 4), 1), PreconditionError);
  CHECK_THROWS_AS(codegree_trimming_cut(star(4), 1), PreconditionError);
}

TEST_CASE("kr recursion") {
  const Graph pet = petersen();
  const auto a = kr_recursive_cut(pet, 3, 0.1, 9, 4, 32);
  const auto b = triangle_sampling_cut(pet, 0.1, std::nullopt, 9, 32);
  CHECK(a.cut.sides() == b.cut.sides());
  CHECK(a.depth == 0);

  for (std::size_t t : {4u, 5u, 6u}) {
    const Graph g = complete_multipartite(3, t);
    const auto r = kr_recursive_cut(g, 4, 0.1, t, 4, 32);
    CHECK(r.cut.surplus().twice() > 0);
    CHECK(r.depth <= 1);
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = complete_multipartite(4, 3 + seed);
    const auto r = kr_recursive_cut(g, 5, 0.2, seed, 2, 16);
    CHECK(r.cut.surplus().twice() >= 0);
    CHECK(r.depth <= 2);
  }
  CHECK_THROWS_AS(kr_recursive_cut(pet, 2, 0.1, 1), UsageError);
}

TEST_CASE("composite kr cut") {
  const Graph ktt = complete_bipartite(6, 6);
  const auto r = composite_kr_cut(ktt, 3, 1);
  CHECK(r.cut.crossing() == 36);

  const auto empty = composite_kr_cut(Graph(6, {}), 3, 1);
  CHECK(empty.cut.surplus().twice() == 0);

  const Graph core = disjoint_union(complete_multipartite(3, 5), Graph(20, {}));
  const auto c = composite_kr_cut(core, 4, 2);
  REQUIRE(c.log.size() >= 2);
  bool dense_branch = false;
  for (const auto& line : c.log) dense_branch |= line.rfind("min-degree branch", 0) == 0;
  CHECK(dense_branch);
  CHECK(c.cut.surplus().twice() > 0);
  CHECK_THROWS_AS(composite_kr_cut(ktt, 2, 1), UsageError);
}
