#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surplus/buckets.hpp"
#include "surplus/graph.hpp"

namespace surplus {

enum class Placement { greedy, random };

// Places each part's two sides on the global cut, one part at a time in the
// given order.  Greedy placement picks the orientation with more crossing
// edges to already placed vertices, so the result's surplus is at least the
// sum of the part surpluses.  Vertices outside every part are placed
// greedily as singletons.  part_cuts[i] is a cut of induced_subgraph(g, parts[i]).
Cut combine_cuts(const Graph& g, const std::vector<std::vector<Vertex>>& parts,
                 const std::vector<Cut>& part_cuts, Placement placement = Placement::greedy,
                 std::uint64_t seed = 0);

// Lifts a cut of induced_subgraph(g, vertices) to g.
Cut lift_cut(const Graph& g, const std::vector<Vertex>& vertices, const Cut& sub);

struct RegularizationParams {
  double alpha = 0.0;
  double beta = 1.0;
  double epsilon = 0.5;
  double theta = 0.0;  // (1 - theta)^beta = 1 - epsilon
  double c = 0.0;      // theta^2/320
  double c0 = 0.0;     // (theta^2/20)^beta c0^{beta-alpha} = 1
  double C = 0.0;      // c0/(1 - theta)

  // Requires 0 < epsilon < 1, beta > 0, alpha < beta and alpha + beta <= 2.
  static RegularizationParams make(double alpha, double beta, double epsilon);
};

enum class RegularizationCase { recurse_high, cut, bounded_subgraph };
std::string_view to_string(RegularizationCase c);

struct RegularizationStep {
  RegularizationCase fired = RegularizationCase::bounded_subgraph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t high = 0;    // |T|
  std::size_t e_high = 0;  // e(T)
  std::size_t e_cross = 0; // e(S,T)
  std::size_t e_low = 0;   // e(S)
};

struct RegularizationResult {
  std::vector<RegularizationStep> trace;
  // Case (ii): cut of the input graph with surplus >= theta^2 m'/160 where m'
  // is the edge count of the subgraph the case fired on, if cut_target_met.
  std::optional<Cut> cut;
  bool cut_target_met = false;
  double cut_target = 0.0;
  // Case (iii): vertices of the bounded-degree subgraph in the input graph.
  std::vector<Vertex> vertices;
  Graph subgraph;
  double weight_input = 0.0;   // n^alpha d^beta of the input
  double weight_output = 0.0;  // of the returned subgraph
};

RegularizationResult regularize(const Graph& g, const RegularizationParams& p, std::uint64_t seed = 0,
                                std::size_t cut_trials = 64);

// Peels vertices with fewer than d neighbours in the remainder T.  order
// lists S in peel order, so every vertex of S has fewer than d neighbours
// later in order or in T.
struct GoodPartition {
  std::vector<Vertex> order;  // S
  std::vector<Vertex> high;   // T, ascending
};
GoodPartition good_partition(const Graph& g, double d);

struct DyadicBucket {
  std::uint64_t s = 1;
  std::uint64_t count = 0;             // unordered 2-paths in the bucket
  std::vector<std::uint64_t> buckets;  // counts by floor(log2 d(u,w))
  std::uint64_t total = 0;
};
// Buckets unordered 2-paths u-v-w by floor(log2 d(u,w)) and picks the
// s = 2^b maximizing count s^exponent (ties to the smaller s).
DyadicBucket dyadic_codegree_bucket(const Graph& g, double exponent = 0.1);

struct GoodPathOptions {
  std::optional<double> epsilon;    // default 1/(40 l^2 log2(Delta+2))
  std::optional<unsigned> q;        // working level, default l
  std::uint64_t path_cap = 10'000'000;
  bool allow_sampling = true;
  std::size_t samples = 200'000;
  std::size_t layer_draws = 20;
};

struct GoodPathProfile {
  unsigned r = 5;
  unsigned ell = 2;
  unsigned q = 2;
  double epsilon = 0.0;
  // s[i][j] for 0 <= i < j <= ell, a power of two.
  std::vector<std::vector<std::uint64_t>> s;
  double nu = 1.0;
  double signature_count = 0.0;  // paths with the chosen signature
  double total_paths = 0.0;      // ell-paths, as ordered vertex sequences
  bool sampled = false;
  std::size_t max_degree = 0;
  double average_degree = 0.0;
  std::size_t n = 0;
  // layer[v] in 0..q.
  std::vector<std::uint8_t> layer;
  std::size_t layer_attempts = 0;
  double good_q_paths = 0.0;
  double expected_a = 0.0;
  // Tuples flattened with stride q+1 (A) and q (B).
  std::vector<Vertex> A;
  std::vector<Vertex> B;
  std::size_t a_count() const { return A.size() / (q + 1); }
  std::size_t b_count() const { return q == 0 ? 0 : B.size() / q; }
};

GoodPathProfile good_path_profile(const Graph& g, unsigned r, std::uint64_t seed,
                                  const GoodPathOptions& opts = {});

// True when s[i][j] <= h_{j-i}(t_i, t_j) < 2 s[i][j] for all i < j.
bool tuple_is_good(const Graph& g, const GoodPathProfile& prof, std::span<const Vertex> tuple);

BucketSets st_sets(const Graph& g, const GoodPathProfile& prof, unsigned q);

struct StSums {
  std::uint64_t ss = 0;  // sum over edges |S(u) & S(v)|
  std::uint64_t tt = 0;  // sum over edges |T(u) & T(v)|
  std::uint64_t st = 0;  // sum over edges |S(u) & T(v)| + |T(u) & S(v)|
  std::uint64_t good_half = 0;  // A-tuples with u0 in T(u_{q-1}) & S(u_q)
};
StSums st_intersection_sums(const Graph& g, const GoodPathProfile& prof, const BucketSets& sets);

}  // namespace surplus
