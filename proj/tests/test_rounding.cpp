#include <doctest.h>

#include <cmath>
#include <numbers>

#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/rng.hpp"
#include "surplus/rounding.hpp"
#include "surplus/vectors.hpp"

using namespace surplus;

namespace {

const Graph& single_edge() {
  static const Graph g = [] {
    const Edge e{0, 1};
    return Graph(2, std::span<const Edge>(&e, 1));
  }();
  return g;
}

VectorAssignment planar(double angle) {
  VectorAssignment va(2, 2, "planar");
  va.set(0, 0, 1.0);
  va.set(1, 0, std::cos(angle));
  va.set(1, 1, std::sin(angle));
  return va;
}

// Applies a random orthogonal map (product of Givens rotations), per-vertex
// positive scales and an optional global negation.
VectorAssignment transform(const VectorAssignment& va, std::uint64_t seed, bool scale, bool negate) {
  Rng rng(seed);
  const std::size_t dim = va.dim();
  std::vector<std::vector<double>> rows(va.size(), std::vector<double>(dim));
  for (Vertex v = 0; v < va.size(); ++v)
    for (std::size_t i = 0; i < dim; ++i) rows[v][i] = va.get(v, i);
  for (std::size_t rep = 0; rep < 3 * dim; ++rep) {
    const std::size_t i = rng.below(dim), j = rng.below(dim);
    if (i == j) continue;
    const double t = 2.0 * std::numbers::pi * rng.uniform();
    for (auto& r : rows) {
      const double a = r[i], b = r[j];
      r[i] = std::cos(t) * a - std::sin(t) * b;
      r[j] = std::sin(t) * a + std::cos(t) * b;
    }
  }
  VectorAssignment out(va.size(), dim, va.label());
  for (Vertex v = 0; v < va.size(); ++v) {
    const double f = (scale ? 0.1 + 5.0 * rng.uniform() : 1.0) * (negate ? -1.0 : 1.0);
    for (std::size_t i = 0; i < dim; ++i) out.set(v, i, f * rows[v][i]);
  }
  return out;
}

}  // namespace

TEST_CASE("analytic_expected_cut on a single edge") {
  CHECK(analytic_expected_cut(single_edge(), planar(std::numbers::pi)) == doctest::Approx(1.0));
  CHECK(analytic_expected_cut(single_edge(), planar(std::numbers::pi / 2)) == doctest::Approx(0.5));
  CHECK(analytic_expected_cut(single_edge(), planar(2 * std::numbers::pi / 3)) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("analytic_expected_cut rejects zero vectors") {
  VectorAssignment va(2, 2, "zero");
  va.set(0, 0, 1.0);
  CHECK_THROWS_AS(analytic_expected_cut(single_edge(), va), PreconditionError);
}

TEST_CASE("hyperplane rounding examples") {
  const auto out = hyperplane_round(single_edge(), planar(std::numbers::pi), 5, 50);
  CHECK(out.best_crossing == 1);
  CHECK(out.mean_crossing == 1.0);

  const Graph p = paley(13);
  const auto va = regular_vectors(p, RegularVectorParams::for_graph(p, 1.0));
  const auto a = hyperplane_round(p, va, 77, 1);
  const auto b = hyperplane_round(p, va, 77, 1);
  CHECK(a.cut.sides() == b.cut.sides());

  const auto mc = hyperplane_round(p, va, 11, 10000);
  const double se = mc.stddev_crossing / std::sqrt(10000.0);
  CHECK(std::abs(mc.mean_crossing - mc.analytic_expectation) <= 3.0 * se);
  CHECK(mc.analytic_expectation == doctest::Approx(analytic_expected_cut(p, va)));
  CHECK(mc.analytic_expectation >= 0.0);
  CHECK(mc.analytic_expectation <= 39.0);
}

TEST_CASE("best of trials reaches the mean on small graphs") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_regular(12, 3, seed);
    const auto va = augment_with_identity(g, regular_vectors(g, RegularVectorParams::for_graph(g, 0.5)));
    const auto out = hyperplane_round(g, va, seed, 1000);
    CHECK(static_cast<double>(out.best_crossing) >= out.analytic_expectation);
    CHECK(out.cut.crossing() == out.best_crossing);
  }
}

TEST_CASE("augment_with_identity") {
  const Graph c5 = cycle(5);
  const auto x = regular_vectors(c5, RegularVectorParams::for_graph(c5, 1.0));
  const auto y = augment_with_identity(c5, x);
  CHECK(y.dim() == x.dim() + 5);
  for (Vertex u = 0; u < 5; ++u) {
    CHECK(y.norm2(u) == doctest::Approx(x.norm2(u) + 1.0).epsilon(1e-14));
    for (Vertex v = 0; v < 5; ++v)
      if (u != v) CHECK(y.dot(u, v) == doctest::Approx(x.dot(u, v)).epsilon(1e-14));
  }
  bool all_negative = true;
  for (const Edge& e : c5.edges()) all_negative &= x.dot(e.u, e.v) < 0.0;
  REQUIRE(all_negative);
  CHECK(analytic_expected_cut(c5, y) >= 2.5);
}

TEST_CASE("analytic expectation is invariant under rotation, scaling and negation") {
  const Graph g = petersen();
  const auto va = augment_with_identity(g, regular_vectors(g, RegularVectorParams::for_graph(g, 0.7)));
  const double base = analytic_expected_cut(g, va);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    CHECK(analytic_expected_cut(g, transform(va, seed, false, false)) == doctest::Approx(base).epsilon(1e-10));
    CHECK(analytic_expected_cut(g, transform(va, seed, true, false)) == doctest::Approx(base).epsilon(1e-10));
    CHECK(analytic_expected_cut(g, transform(va, seed, true, true)) == doctest::Approx(base).epsilon(1e-10));
  }
}

TEST_CASE("surplus_lower_bound_from_products") {
  CHECK(surplus_lower_bound_from_products({}, 1.0) == 0.0);
  const std::vector<EdgeProduct> only_a{{1.0, 0.0}, {2.0, 0.0}};
  // 3/(pi (1 + 1))
  CHECK(surplus_lower_bound_from_products(only_a, 1.0) == doctest::Approx(0.477464829275686));
  const std::vector<EdgeProduct> only_b{{0.0, 1.0}};
  CHECK(surplus_lower_bound_from_products(only_b, 1.0) <= 0.0);
  CHECK(surplus_lower_bound_from_products(only_b, 1.0, 0.0) == doctest::Approx(-0.5));
  const std::vector<EdgeProduct> bad{{-1.0, 0.0}};
  CHECK_THROWS_AS(surplus_lower_bound_from_products(bad, 1.0), UsageError);
}

TEST_CASE("product bound never exceeds the analytic surplus of the augmented assignment") {
  for (std::uint32_t q : {13u, 17u, 29u}) {
    const Graph g = paley(q);
    const auto x = regular_vectors(g, RegularVectorParams::for_graph(g, 0.3));
    std::vector<EdgeProduct> prods;
    for (const Edge& e : g.edges()) {
      const double ip = x.dot(e.u, e.v);
      prods.push_back({std::max(-ip, 0.0), std::max(ip, 0.0)});
    }
    double mx = 0.0, mn = 1e300;
    for (Vertex v = 0; v < q; ++v) {
      mx = std::max(mx, x.norm2(v));
      mn = std::min(mn, x.norm2(v));
    }
    const double bound = surplus_lower_bound_from_products(prods, mx, mn);
    CHECK(bound > 0.0);
    CHECK(bound <= analytic_expected_surplus(g, augment_with_identity(g, x)) + 1e-12);
  }
}

TEST_CASE("vector assignment storage") {
  VectorAssignment va(3, 4, "t");
  va.set(2, 3, 1.5);
  CHECK(va.get(2, 3) == 1.5);
  CHECK(va.norm2(2) == 2.25);
  CHECK_THROWS_AS(va.set(3, 0, 1.0), UsageError);
  CHECK(cosine_similarity(planar(std::numbers::pi / 3), 0, 1) == doctest::Approx(0.5));
}
