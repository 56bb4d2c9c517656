#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surplus/buckets.hpp"
#include "surplus/graph.hpp"
#include "surplus/structure.hpp"

namespace surplus {

// Labels: 0 with probability 1/3, each of 1..k with probability p, the rest
// on k+1.
struct SamplingPlan {
  std::size_t k = 0;
  double p = 0.0;
  bool clamped = false;  // p lowered to 2/(3k)
};

struct SamplingTrial {
  std::int64_t x = 0;  // edges between A_j and B_j
  std::int64_t y = 0;  // edges inside some A_j
  std::int64_t z = 0;  // edges inside some B_j
  std::size_t crossing = 0;
  HalfInt surplus;
};

struct SamplingCutResult {
  Cut cut;
  SamplingPlan plan;
  std::size_t trials = 0;
  std::size_t best_trial = 0;
  std::vector<SamplingTrial> per_trial;
  // Best trial: A_j and B_j for j = 1..k (empty pairs dropped).
  std::vector<std::vector<Vertex>> a_parts;
  std::vector<std::vector<Vertex>> b_parts;
  SamplingTrial xyz() const { return per_trial.empty() ? SamplingTrial{} : per_trial[best_trial]; }
};

inline constexpr std::size_t kDefaultTrials = 64;

// mu = epsilon/(4C), k = ceil(mu n/d), p = d/(3n); A_j holds the label-0
// neighbours of v_j outside every other N(v_i), B_j the label-j vertices.
// C defaults to Delta/d.  Requires Delta <= C d and d >= 1.
SamplingCutResult triangle_sampling_cut(const Graph& g, double epsilon, std::optional<double> C, std::uint64_t seed,
                                        std::size_t trials = kDefaultTrials);

// A_j holds the label-0 vertices u with v_j in S(u) and no other v_i in S(u).
// C5 window: k = ceil(s n/(2 d^2)), p = nu d^2/(10 s n).  Odd cycles:
// k = ceil(s n/(2 Delta^q)), p = mu nu d^q/(s n).
SamplingPlan bucket_sampling_plan(const Graph& g, const BucketSets& sets, double mu = 0.1);
SamplingCutResult bucket_neighborhood_cut(const Graph& g, const BucketSets& sets, std::uint64_t seed,
                                          std::size_t trials = kDefaultTrials, double mu = 0.1);

struct SparseSetResult {
  Cut cut;
  double target = 0.0;           // (|S|^2 d/(2n) - e(S))/2
  std::int64_t best_q = 0;       // e(S,T) - e(S) - e(T) after deduplication
  std::size_t trials = 0;
};

// T is random with rate |S|/n; each vertex of S & T leaves the set in which
// it has more neighbours.  The cut S | T of G[S u T] has surplus Q/2 and is
// extended to G greedily, then improved by single flips.  Requires g regular.
SparseSetResult sparse_set_cut(const Graph& g, const std::vector<Vertex>& S, std::uint64_t seed,
                               std::size_t trials = kDefaultTrials);

struct TrimmingResult {
  Cut cut;
  bool fallback = false;
  std::string reason;
  double N = 0.0;  // nd
  double D = 0.0;  // d^2/n
  double c = 1.0 / (12.0 * 40.0 * 40.0);
  double q_mass = 0.0;      // sum of Delta_+^3 over z with d_H(z) <= 20D
  std::uint64_t e_h = 0;    // 3 t(G)
  bool hypothesis = false;  // e(H) <= ND/2 + c q/D^2
  unsigned level = 0;
  double p = 0.0;
  double level_mass = 0.0;
  double t_size = 0.0;
  double e_h_t = 0.0;
  bool target_met = false;  // e_H(T) <= |T|^2 D/(2N) - c q/D^2
  Vertex w = 0;
  std::vector<Vertex> S;    // subset of N(w)
  std::size_t e_s = 0;
  double slice_bound = 0.0;  // |S|^2 d/(2n) - c q/(n D^2)
  double sparse_target = 0.0;
};

// Requires g d-regular with d <= n/2.  Falls back to a local-search cut when
// H has no positive Delta_+ mass, the edge hypothesis fails or no draw meets
// the target; the better of that cut and the sparse-set cut is returned.
TrimmingResult codegree_trimming_cut(const Graph& g, std::uint64_t seed, std::size_t draws = 50);

struct RecursiveCutResult {
  Cut cut;
  std::size_t depth = 0;  // sampling levels entered below the top call
  std::vector<std::string> log;
};

// r = 3 runs triangle_sampling_cut; r >= 4 regularizes with
// (alpha, beta, eps) = (-(r-3), r-1, eps/r), samples
// k = ceil(eps/(8 C r^2) n/d) exclusive neighbourhoods and recurses with
// r-1 on each, keeping the best of `restarts`.
RecursiveCutResult kr_recursive_cut(const Graph& g, unsigned r, double epsilon, std::uint64_t seed,
                                    std::size_t restarts = 4, std::size_t trials = kDefaultTrials);

// good_partition at d = m^{(r-1)/(2r-1)}, then the best of the applicable
// branches: S | T when e(S,T) >= 2m/3, sampling on G[S] when e(S) >= m/6,
// kr_recursive_cut on G[T] when e(T) >= m/6.
RecursiveCutResult composite_kr_cut(const Graph& g, unsigned r, std::uint64_t seed,
                                    std::size_t trials = kDefaultTrials);

}  // namespace surplus
