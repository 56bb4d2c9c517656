#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace surplus {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Fixed-size bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  std::size_t count() const;
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

class CodegreeProfile;

// Immutable simple undirected graph: adjacency bitrows plus sorted
// neighbour lists.
class Graph {
 public:
  Graph();
  // Deduplicates reversed/repeated pairs.  Throws UsageError on a self-loop or
  // an endpoint >= n.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }
  bool adjacent(Vertex u, Vertex v) const { return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U; }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Lazily built; shared by copies of this graph.
  const CodegreeProfile& codegrees() const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  struct ProfileCache;
  std::shared_ptr<ProfileCache> cache_;
};

// A value k/2 for integer k; used for surpluses.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  constexpr std::int64_t twice() const { return twice_; }
  constexpr double value() const { return static_cast<double>(twice_) / 2.0; }
  std::string str() const;  // "3", "-1.5"
  friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }

 private:
  std::int64_t twice_ = 0;
};

// Two-colouring of the vertices of a graph with its crossing count cached.
class Cut {
 public:
  Cut() = default;
  Cut(const Graph& g, std::vector<std::uint8_t> side);

  static Cut all_on_one_side(const Graph& g) { return Cut(g, std::vector<std::uint8_t>(g.num_vertices(), 0)); }

  const std::vector<std::uint8_t>& sides() const { return side_; }
  std::uint8_t side(Vertex v) const { return side_[v]; }
  std::size_t num_vertices() const { return side_.size(); }
  std::size_t crossing() const { return crossing_; }
  std::size_t num_edges() const { return m_; }
  HalfInt surplus() const {
    return HalfInt::from_twice(2 * static_cast<std::int64_t>(crossing_) - static_cast<std::int64_t>(m_));
  }
  // Recomputes the crossing count against g.
  bool consistent_with(const Graph& g) const;
  std::string bitstring() const;

 private:
  std::vector<std::uint8_t> side_;
  std::size_t crossing_ = 0;
  std::size_t m_ = 0;
};

std::size_t count_crossing(const Graph& g, std::span<const std::uint8_t> side);

// Sparse codegree table over pairs at distance <= 2.
class CodegreeProfile {
 public:
  explicit CodegreeProfile(const Graph& g);

  std::size_t codegree(Vertex u, Vertex v) const;
  // d(u,v) - d^2/n with d = 2m/n the average degree.
  double delta(Vertex u, Vertex v) const;
  double delta_plus(Vertex u, Vertex v) const { return std::max(delta(u, v), 0.0); }
  std::size_t num_pairs() const { return table_.size(); }
  // All (u, v, d(u,v)) with u < v and d(u,v) > 0, sorted.
  const std::vector<std::tuple<Vertex, Vertex, std::uint32_t>>& pairs() const { return sorted_; }

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::unordered_map<std::uint64_t, std::uint32_t> table_;
  std::vector<std::tuple<Vertex, Vertex, std::uint32_t>> sorted_;
};

// ---- counting primitives ------------------------------------------------

struct DegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
  std::uint64_t average_numerator = 0;  // 2m
  std::uint64_t average_denominator = 1;  // n
  double average = 0.0;
};

DegreeStats degree_stats(const Graph& g);
bool is_regular(const Graph& g);
double average_degree(const Graph& g);

std::size_t codegree(const Graph& g, Vertex u, Vertex v);

// Exact walk counts; throws Error when a count exceeds 2^63 - 1.
std::uint64_t walk_count(const Graph& g, Vertex u, Vertex v, unsigned length);
std::vector<std::uint64_t> walk_counts_from(const Graph& g, Vertex u, unsigned length);

std::uint64_t triangle_count(const Graph& g);
// t(G) - d^3/6 with d the average degree.
double triangle_surplus(const Graph& g);
std::uint64_t clique_count(const Graph& g, std::size_t r);
// Homomorphisms C5 -> G, i.e. trace(A^5).
std::uint64_t hom_count_c5(const Graph& g);

struct Degeneracy {
  std::size_t degeneracy = 0;
  std::vector<Vertex> order;
};
Degeneracy degeneracy_order(const Graph& g);

std::size_t edges_within(const Graph& g, const VertexSet& s);
std::size_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

// Subgraph induced on vertices; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double edwards = 0.0;       // (sqrt(8m+1)-1)/8
  double shearer_raw = 0.0;   // sum_v sqrt(d(v)), constant-free
  std::optional<double> lambda_min;
  std::optional<double> eigenvalue_surplus_bound;  // |lambda_min| n / 4
};

double edwards_bound(std::size_t m);
BoundReport bound_report(const Graph& g);

}  // namespace surplus
