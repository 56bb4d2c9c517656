#include <doctest.h>

#include <cmath>
#include <sstream>

#include "surplus/edge_list.hpp"
#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/graph.hpp"

using namespace surplus;

namespace {

// Naive r-subset loop for r = 4.
std::uint64_t naive_k4(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::uint64_t c = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex x = b + 1; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
          if (g.adjacent(a, b) && g.adjacent(a, x) && g.adjacent(a, y) && g.adjacent(b, x) &&
              g.adjacent(b, y) && g.adjacent(x, y))
            ++c;
  return c;
}

std::uint64_t naive_hom_c5(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::uint64_t c = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (g.adjacent(a, b))
        for (Vertex x = 0; x < n; ++x)
          if (g.adjacent(b, x))
            for (Vertex y = 0; y < n; ++y)
              if (g.adjacent(x, y))
                for (Vertex z = 0; z < n; ++z)
                  if (g.adjacent(y, z) && g.adjacent(z, a)) ++c;
  return c;
}

std::uint64_t naive_triangles(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::uint64_t c = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex x = b + 1; x < n; ++x)
        if (g.adjacent(a, b) && g.adjacent(a, x) && g.adjacent(b, x)) ++c;
  return c;
}

}  // namespace

TEST_CASE("degree_stats examples") {
  auto k4 = degree_stats(complete(4));
  CHECK(k4.min == 3);
  CHECK(k4.max == 3);
  CHECK(k4.average == 3.0);
  auto c5 = degree_stats(cycle(5));
  CHECK(c5.min == 2);
  CHECK(c5.max == 2);
  auto st = degree_stats(star(3));
  CHECK(st.min == 1);
  CHECK(st.max == 3);
  CHECK(st.average == 1.5);
  CHECK(st.average_numerator == 6);
  CHECK(st.average_denominator == 4);
}

TEST_CASE("codegree examples") {
  CHECK(codegree(cycle(4), 0, 2) == 2);
  CHECK(codegree(complete(4), 1, 3) == 2);
  const Graph p = paley(13);
  for (const Edge& e : p.edges()) CHECK(codegree(p, e.u, e.v) == 2);
  CHECK_THROWS_AS(codegree(p, 3, 3), UsageError);
}

TEST_CASE("codegree profile agrees with direct codegrees") {
  const Graph g = gnp(15, 0.4, 7);
  const auto& prof = g.codegrees();
  const double d = average_degree(g);
  for (Vertex u = 0; u < 15; ++u)
    for (Vertex v = u + 1; v < 15; ++v) {
      CHECK(prof.codegree(u, v) == codegree(g, u, v));
      CHECK(prof.codegree(v, u) == prof.codegree(u, v));
      CHECK(prof.codegree(u, v) <= std::min(g.degree(u), g.degree(v)));
      CHECK(prof.delta(u, v) == doctest::Approx(codegree(g, u, v) - d * d / 15.0));
    }
}

TEST_CASE("walk_count examples") {
  CHECK(walk_count(complete(3), 0, 0, 3) == 2);
  CHECK(walk_count(cycle(4), 0, 2, 2) == 2);
  CHECK(walk_count(petersen(), 4, 4, 0) == 1);
  CHECK(walk_count(petersen(), 4, 5, 0) == 0);
}

TEST_CASE("triangle counts") {
  CHECK(triangle_count(complete(4)) == 4);
  const Graph p = paley(13);
  CHECK(triangle_count(p) == 26);
  CHECK(triangle_count(p) == naive_triangles(p));
  CHECK(triangle_surplus(p) == doctest::Approx(-10.0));
  CHECK(triangle_count(cycle(6)) == 0);
  CHECK(triangle_surplus(cycle(6)) == doctest::Approx(-8.0 / 6.0));
}

TEST_CASE("clique_count") {
  CHECK(clique_count(complete(5), 4) == 5);
  CHECK(clique_count(petersen(), 3) == 0);
  const Graph g = gnp(12, 0.5, 2024);
  CHECK(clique_count(g, 4) == naive_k4(g));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph h = gnp(10, 0.5, seed);
    CHECK(clique_count(h, 2) == h.num_edges());
    CHECK(clique_count(h, 3) == triangle_count(h));
  }
}

TEST_CASE("hom_count_c5") {
  CHECK(hom_count_c5(cycle(5)) == 10);
  CHECK(hom_count_c5(complete(3)) == 30);
  CHECK(hom_count_c5(complete(3)) == naive_hom_c5(complete(3)));
  CHECK(hom_count_c5(complete_bipartite(3, 4)) == 0);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = gnp(8, 0.5, seed);
    CHECK(hom_count_c5(g) == naive_hom_c5(g));
  }
}

TEST_CASE("degeneracy_order") {
  CHECK(degeneracy_order(path(6)).degeneracy == 1);
  CHECK(degeneracy_order(star(5)).degeneracy == 1);
  CHECK(degeneracy_order(complete(6)).degeneracy == 5);
  CHECK(degeneracy_order(petersen()).degeneracy == 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gnp(16, 0.3, seed);
    const auto deg = degeneracy_order(g);
    REQUIRE(deg.order.size() == 16);
    std::vector<std::size_t> pos(16);
    for (std::size_t i = 0; i < 16; ++i) pos[deg.order[i]] = i;
    for (Vertex v = 0; v < 16; ++v) {
      std::size_t later = 0;
      for (Vertex u : g.neighbors(v)) later += pos[u] > pos[v];
      CHECK(later <= deg.degeneracy);
    }
  }
}

TEST_CASE("counting identities on random graphs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = gnp(14, 0.35, seed);
    std::size_t deg_sum = 0;
    std::uint64_t trace3 = 0;
    for (Vertex v = 0; v < 14; ++v) {
      deg_sum += g.degree(v);
      trace3 += walk_count(g, v, v, 3);
    }
    CHECK(deg_sum == 2 * g.num_edges());
    CHECK(trace3 == 6 * triangle_count(g));
    std::uint64_t codeg = 0;
    for (const Edge& e : g.edges()) codeg += codegree(g, e.u, e.v);
    CHECK(codeg == 3 * triangle_count(g));
  }
}

TEST_CASE("bound_report") {
  CHECK(edwards_bound(3) == 0.5);
  CHECK(edwards_bound(10) == 1.0);
  const auto r = bound_report(cycle(4));
  CHECK(r.shearer_raw == doctest::Approx(4.0 * std::sqrt(2.0)));
  CHECK_FALSE(r.lambda_min.has_value());
}

TEST_CASE("Cut bookkeeping") {
  const Graph g = cycle(5);
  Cut c(g, {0, 1, 0, 1, 1});
  CHECK(c.crossing() == 4);
  CHECK(c.surplus() == HalfInt::from_twice(3));
  CHECK(c.surplus().str() == "1.5");
  CHECK(c.consistent_with(g));
  CHECK(Cut::all_on_one_side(g).surplus().str() == "-2.5");
}

TEST_CASE("edge list parsing") {
  const auto f = read_edge_list(std::string_view("# comment\nb a\na b\nc a  # trailing\n"));
  CHECK(f.graph.num_vertices() == 3);
  CHECK(f.graph.num_edges() == 2);
  CHECK(f.labels == std::vector<std::string>{"a", "b", "c"});
  try {
    read_edge_list(std::string_view("0 1\n2 2\n"));
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(read_edge_list(std::string_view("0 1 2\n")), ParseError);

  const Graph p = paley(13);
  std::ostringstream out;
  write_edge_list(out, p, {"generator: paley 13"});
  const auto back = read_edge_list(std::string_view(out.str()));
  CHECK(back.graph.num_edges() == 39);
}

TEST_CASE("induced subgraph and disjoint union") {
  const Graph k5 = complete(5);
  const std::vector<Vertex> vs{0, 2, 4};
  const Graph h = induced_subgraph(k5, vs);
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 3);
  const Graph u = disjoint_union(complete(3), cycle(4));
  CHECK(u.num_vertices() == 7);
  CHECK(u.num_edges() == 7);
  CHECK_FALSE(u.adjacent(0, 3));
}
