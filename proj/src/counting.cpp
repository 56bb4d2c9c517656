#include <cmath>
#include <functional>
#include <limits>

#include "surplus/errors.hpp"
#include "surplus/graph.hpp"

namespace surplus {

namespace {

constexpr std::uint64_t kWalkLimit = std::numeric_limits<std::int64_t>::max();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r) || r > kWalkLimit) throw Error("walk count exceeds 2^63-1");
  return r;
}

}  // namespace

DegreeStats degree_stats(const Graph& g) {
  if (g.num_vertices() == 0) throw UsageError("degree_stats: empty vertex set");
  DegreeStats st;
  st.min = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    st.min = std::min(st.min, g.degree(v));
    st.max = std::max(st.max, g.degree(v));
  }
  st.average_numerator = 2 * g.num_edges();
  st.average_denominator = g.num_vertices();
  st.average = static_cast<double>(st.average_numerator) / static_cast<double>(st.average_denominator);
  return st;
}

bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.num_vertices(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

double average_degree(const Graph& g) {
  if (g.num_vertices() == 0) return 0.0;
  return 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
}

std::size_t codegree(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw UsageError("codegree of a vertex with itself");
  return popcount_and(g.row(u), g.row(v));
}

std::vector<std::uint64_t> walk_counts_from(const Graph& g, Vertex u, unsigned length) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> cur(n, 0), next(n);
  cur[u] = 1;
  for (unsigned step = 0; step < length; ++step) {
    for (Vertex x = 0; x < n; ++x) {
      std::uint64_t s = 0;
      for (Vertex y : g.neighbors(x)) s = checked_add(s, cur[y]);
      next[x] = s;
    }
    cur.swap(next);
  }
  return cur;
}

std::uint64_t walk_count(const Graph& g, Vertex u, Vertex v, unsigned length) {
  return walk_counts_from(g, u, length)[v];
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t t = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) t += popcount_and(g.row(u), g.row(v));
  return t / 3;
}

double triangle_surplus(const Graph& g) {
  const double d = average_degree(g);
  return static_cast<double>(triangle_count(g)) - d * d * d / 6.0;
}

std::uint64_t clique_count(const Graph& g, std::size_t r) {
  const std::size_t n = g.num_vertices();
  if (r < 2 || r > n) throw UsageError("clique_count: need 2 <= r <= n");
  const std::size_t words = g.words_per_row();
  // Extend cliques by larger-index vertices only, so each clique is counted once.
  std::function<std::uint64_t(const std::vector<std::uint64_t>&, std::size_t)> extend =
      [&](const std::vector<std::uint64_t>& cand, std::size_t need) -> std::uint64_t {
    std::uint64_t total = 0;
    if (need == 1) {
      for (auto w : cand) total += std::popcount(w);
      return total;
    }
    std::vector<std::uint64_t> next(words);
    for (std::size_t wi = 0; wi < words; ++wi) {
      std::uint64_t w = cand[wi];
      while (w) {
        const Vertex v = static_cast<Vertex>(wi * 64 + std::countr_zero(w));
        w &= w - 1;
        auto row = g.row(v);
        bool any = false;
        for (std::size_t k = 0; k < words; ++k) {
          std::uint64_t above = ~std::uint64_t{0};
          if (k < (v >> 6)) above = 0;
          if (k == (v >> 6)) above = (v & 63) == 63 ? 0 : ~std::uint64_t{0} << ((v & 63) + 1);
          next[k] = cand[k] & row[k] & above;
          any |= next[k] != 0;
        }
        if (any) total += extend(next, need - 1);
      }
    }
    return total;
  };
  std::vector<std::uint64_t> all(words, 0);
  for (Vertex v = 0; v < n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
  return extend(all, r);
}

std::uint64_t hom_count_c5(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) total = checked_add(total, walk_count(g, u, u, 5));
  return total;
}

Degeneracy degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Degeneracy out;
  std::vector<std::size_t> deg(n);
  std::vector<std::uint8_t> removed(n, 0);
  std::size_t maxdeg = 0;
  for (Vertex v = 0; v < n; ++v) maxdeg = std::max(maxdeg, deg[v] = g.degree(v));
  std::vector<std::vector<Vertex>> buckets(maxdeg + 1);
  for (Vertex v = n; v-- > 0;) buckets[deg[v]].push_back(v);
  std::size_t lo = 0;
  out.order.reserve(n);
  while (out.order.size() < n) {
    if (lo > 0) --lo;
    Vertex pick = 0;
    for (;;) {
      auto& b = buckets[lo];
      if (b.empty()) {
        ++lo;
        continue;
      }
      pick = b.back();
      b.pop_back();
      if (!removed[pick] && deg[pick] == lo) break;
    }
    out.degeneracy = std::max(out.degeneracy, deg[pick]);
    removed[pick] = 1;
    out.order.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!removed[w]) buckets[--deg[w]].push_back(w);
  }
  return out;
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  for (Vertex v : s.members()) twice += popcount_and(g.row(v), s.words());
  return twice / 2;
}

std::size_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  std::size_t c = 0;
  for (Vertex v : s.members()) c += popcount_and(g.row(v), t.words());
  return c;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (pos[vertices[i]] != -1) throw UsageError("induced_subgraph: repeated vertex");
    pos[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (pos[w] > static_cast<std::int64_t>(i)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(pos[w])});
  return Graph(vertices.size(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (auto e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.num_vertices() + b.num_vertices(), edges);
}

double edwards_bound(std::size_t m) { return (std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 8.0; }

BoundReport bound_report(const Graph& g) {
  BoundReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.edwards = edwards_bound(r.m);
  for (Vertex v = 0; v < r.n; ++v) r.shearer_raw += std::sqrt(static_cast<double>(g.degree(v)));
  return r;
}

}  // namespace surplus
