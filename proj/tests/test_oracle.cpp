#include <doctest.h>

#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/oracle.hpp"
#include "surplus/spectral.hpp"

using namespace surplus;

namespace {

std::size_t brute_mc(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  std::vector<std::uint8_t> side(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) side[i] = (mask >> i) & 1U;
    best = std::max(best, count_crossing(g, side));
  }
  return best;
}

}  // namespace

TEST_CASE("exact oracle examples") {
  const auto k5 = max_cut_exact(complete(5));
  CHECK(k5.mc == 6);
  CHECK(k5.witness.surplus().value() == 1.0);
  CHECK(k5.exact);
  CHECK(max_cut_exact(cycle(5)).mc == 4);
  CHECK(max_cut_exact(petersen()).mc == 12);
  CHECK(max_cut_exact(complete(7)).witness.surplus().value() == 1.5);
}

TEST_CASE("exact oracle matches brute force and fixes vertex 0") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = gnp(11, 0.45, seed);
    const auto r = max_cut_exact(g);
    CHECK(r.mc == brute_mc(g));
    CHECK(r.witness.crossing() == r.mc);
    CHECK(r.witness.side(0) == 0);
    CHECK(r.witness.consistent_with(g));
  }
}

TEST_CASE("branch and bound agrees with exhaustive enumeration") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = gnp(18, 0.35, seed);
    const auto a = max_cut_exact(g);
    const auto b = max_cut_branch_bound(g);
    CHECK(a.mc == b.mc);
    CHECK(b.witness.crossing() == b.mc);
    CHECK(a.witness.sides() == b.witness.sides());
  }
}

TEST_CASE("exact witness is a local optimum and respects Edwards and eigenvalue bounds") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gnp(13, 0.5, 100 + seed);
    const auto r = max_cut_exact(g);
    auto side = r.witness.sides();
    for (Vertex v = 0; v < 13; ++v) {
      side[v] ^= 1U;
      CHECK(count_crossing(g, side) <= r.mc);
      side[v] ^= 1U;
    }
    CHECK(r.witness.surplus().value() >= edwards_bound(g.num_edges()) - 1e-12);
    CHECK(static_cast<double>(r.mc) <= eigenvalue_upper_bound(g) + 1e-9);
  }
}

TEST_CASE("oracle size cap") {
  CHECK_THROWS_AS(max_cut_exact(cycle(31)), PreconditionError);
}

TEST_CASE("local search") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = gnp(14, 0.4, seed);
    const auto ls = local_search(g, seed, 5);
    CHECK_FALSE(ls.exact);
    CHECK(ls.witness.surplus().twice() >= 0);
    CHECK(ls.mc <= max_cut_exact(g).mc);
  }
  CHECK(local_search(complete(5), 17, 10).mc == 6);
  // Regression value pinned from the first run.
  const Graph p29 = paley(29);
  const auto r = local_search(p29, 1, 200);
  CHECK(2 * r.mc >= p29.num_edges() + 2);
  CHECK(r.mc == 122);
}

TEST_CASE("flip_to_local_optimum") {
  const Graph g = gnp(20, 0.3, 3);
  const auto side = flip_to_local_optimum(g, std::vector<std::uint8_t>(20, 0));
  for (Vertex v = 0; v < 20; ++v) {
    std::size_t same = 0;
    for (Vertex u : g.neighbors(v)) same += side[u] == side[v];
    CHECK(2 * same <= g.degree(v));
  }
}
