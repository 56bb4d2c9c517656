#include "surplus/structure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>

#include "surplus/errors.hpp"
#include "surplus/oracle.hpp"
#include "surplus/rng.hpp"

namespace surplus {

Cut combine_cuts(const Graph& g, const std::vector<std::vector<Vertex>>& parts, const std::vector<Cut>& part_cuts,
                 Placement placement, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (parts.size() != part_cuts.size()) throw UsageError("one cut per part is required");
  std::vector<std::uint8_t> side(n, 0);
  std::vector<std::uint8_t> placed(n, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (part_cuts[i].num_vertices() != parts[i].size()) throw UsageError("part cut does not match its part");
    for (Vertex v : parts[i]) {
      if (v >= n) throw UsageError("part vertex out of range");
      if (placed[v] == 2) throw UsageError("parts overlap");
      placed[v] = 2;
    }
  }
  std::fill(placed.begin(), placed.end(), 0);
  Rng rng(seed);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    std::size_t keep = 0, flip = 0;
    for (std::size_t j = 0; j < part.size(); ++j) {
      const std::uint8_t sj = part_cuts[i].side(static_cast<Vertex>(j));
      for (Vertex w : g.neighbors(part[j])) {
        if (!placed[w]) continue;
        if (side[w] != sj)
          ++keep;
        else
          ++flip;
      }
    }
    const bool flip_part = placement == Placement::greedy ? flip > keep : (rng() & 1U) != 0;
    for (std::size_t j = 0; j < part.size(); ++j) {
      side[part[j]] = static_cast<std::uint8_t>(part_cuts[i].side(static_cast<Vertex>(j)) ^ (flip_part ? 1 : 0));
      placed[part[j]] = 1;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (placed[v]) continue;
    std::size_t on[2] = {0, 0};
    for (Vertex w : g.neighbors(v))
      if (placed[w]) ++on[side[w]];
    side[v] = on[0] >= on[1] ? 1 : 0;
    placed[v] = 1;
  }
  return Cut(g, std::move(side));
}

Cut lift_cut(const Graph& g, const std::vector<Vertex>& vertices, const Cut& sub) {
  return combine_cuts(g, {vertices}, {sub});
}

RegularizationParams RegularizationParams::make(double alpha, double beta, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw UsageError("regularization needs 0 < epsilon < 1");
  if (!(beta > 0.0)) throw UsageError("regularization needs beta > 0");
  if (!(alpha < beta)) throw UsageError("regularization needs alpha < beta");
  if (!(alpha + beta <= 2.0 + 1e-12)) throw UsageError("regularization needs alpha + beta <= 2");
  RegularizationParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.epsilon = epsilon;
  p.theta = 1.0 - std::pow(1.0 - epsilon, 1.0 / beta);
  p.c = p.theta * p.theta / 320.0;
  p.c0 = std::pow(p.theta * p.theta / 20.0, -beta / (beta - alpha));
  p.C = p.c0 / (1.0 - p.theta);
  return p;
}

std::string_view to_string(RegularizationCase c) {
  switch (c) {
    case RegularizationCase::recurse_high: return "recurse_high";
    case RegularizationCase::cut: return "cut";
    case RegularizationCase::bounded_subgraph: return "bounded_subgraph";
  }
  return "?";
}

namespace {

double weight(const RegularizationParams& p, std::size_t n, std::size_t m) {
  if (n == 0) return 0.0;
  const double d = 2.0 * static_cast<double>(m) / static_cast<double>(n);
  return std::pow(static_cast<double>(n), p.alpha) * std::pow(d, p.beta);
}

}  // namespace

RegularizationResult regularize(const Graph& g, const RegularizationParams& p, std::uint64_t seed,
                                std::size_t cut_trials) {
  RegularizationResult res;
  res.weight_input = weight(p, g.num_vertices(), g.num_edges());
  std::vector<Vertex> verts(g.num_vertices());
  for (Vertex v = 0; v < verts.size(); ++v) verts[v] = v;
  Graph h = g;
  for (std::size_t iter = 0;; ++iter) {
    check_invariant(iter <= g.num_vertices(), "regularization did not terminate");
    const std::size_t n = h.num_vertices(), m = h.num_edges();
    RegularizationStep step;
    step.n = n;
    step.m = m;
    const double d = n ? 2.0 * static_cast<double>(m) / static_cast<double>(n) : 0.0;
    std::vector<std::uint8_t> high(n, 0);
    for (Vertex v = 0; v < n; ++v) high[v] = static_cast<double>(h.degree(v)) > p.c0 * d;
    for (const Edge& e : h.edges()) {
      const int k = high[e.u] + high[e.v];
      if (k == 2)
        ++step.e_high;
      else if (k == 1)
        ++step.e_cross;
      else
        ++step.e_low;
    }
    step.high = static_cast<std::size_t>(std::count(high.begin(), high.end(), 1));
    const double mm = static_cast<double>(m);
    const double th2 = p.theta * p.theta;
    if (m > 0 && static_cast<double>(step.e_high) >= th2 / 20.0 * mm) {
      step.fired = RegularizationCase::recurse_high;
      res.trace.push_back(step);
      std::vector<Vertex> local, next;
      for (Vertex v = 0; v < n; ++v)
        if (high[v]) {
          local.push_back(v);
          next.push_back(verts[v]);
        }
      h = induced_subgraph(h, local);
      verts = std::move(next);
      continue;
    }
    if (m > 0 && static_cast<double>(step.e_cross) >= p.theta / 2.0 * mm) {
      step.fired = RegularizationCase::cut;
      res.trace.push_back(step);
      res.cut_target = th2 * mm / 160.0;
      // Q = e(S',T) - e(S') - e(T); the cut S' | T of H[S' u T] has surplus Q/2.
      long long best_q = std::numeric_limits<long long>::min();
      std::vector<std::uint8_t> best_pick;
      for (std::size_t t = 0; t < std::max<std::size_t>(cut_trials, 1); ++t) {
        Rng rng(derive_seed(seed, iter, t));
        std::vector<std::uint8_t> pick(n, 0);
        for (Vertex v = 0; v < n; ++v) pick[v] = high[v] ? 1 : (rng.bernoulli(p.theta / 4.0) ? 1 : 0);
        long long q = 0;
        for (const Edge& e : h.edges()) {
          if (!pick[e.u] || !pick[e.v]) continue;
          q += high[e.u] != high[e.v] ? 1 : -1;
        }
        if (q > best_q) {
          best_q = q;
          best_pick = std::move(pick);
        }
      }
      std::vector<Vertex> part;
      std::vector<std::uint8_t> sides;
      for (Vertex v = 0; v < n; ++v)
        if (best_pick[v]) {
          part.push_back(verts[v]);
          sides.push_back(high[v]);
        }
      const Graph sub = induced_subgraph(g, part);
      const Cut sub_cut(sub, std::move(sides));
      check_invariant(sub_cut.surplus().twice() == best_q, "case (ii) cut surplus differs from Q/2");
      res.cut = lift_cut(g, part, sub_cut);
      res.cut_target_met = 0.5 * static_cast<double>(best_q) >= res.cut_target;
      return res;
    }
    step.fired = RegularizationCase::bounded_subgraph;
    res.trace.push_back(step);
    std::vector<Vertex> local, next;
    for (Vertex v = 0; v < n; ++v)
      if (!high[v]) {
        local.push_back(v);
        next.push_back(verts[v]);
      }
    res.subgraph = induced_subgraph(h, local);
    res.vertices = std::move(next);
    res.weight_output = weight(p, res.subgraph.num_vertices(), res.subgraph.num_edges());
    const auto& sub = res.subgraph;
    if (sub.num_vertices() > 0) {
      const double dt = average_degree(sub);
      check_invariant(static_cast<double>(degree_stats(sub).max) <= p.C * dt * (1.0 + 1e-12),
                      "regularized subgraph exceeds the degree ratio C");
    }
    check_invariant(res.weight_output >= (1.0 - p.epsilon) * res.weight_input * (1.0 - 1e-12),
                    "regularized subgraph lost more than epsilon of n^alpha d^beta");
    return res;
  }
}

GoodPartition good_partition(const Graph& g, double d) {
  if (!(d >= 0.0)) throw UsageError("partition threshold must be non-negative");
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<std::uint8_t> removed(n, 0), queued(n, 0);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (static_cast<double>(deg[v]) < d) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }
  GoodPartition out;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    removed[v] = 1;
    out.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      --deg[w];
      if (!queued[w] && static_cast<double>(deg[w]) < d) {
        queue.push_back(w);
        queued[w] = 1;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) out.high.push_back(v);
  return out;
}

DyadicBucket dyadic_codegree_bucket(const Graph& g, double exponent) {
  DyadicBucket b;
  for (const auto& [u, w, c] : g.codegrees().pairs()) {
    (void)u;
    (void)w;
    const auto level = static_cast<std::size_t>(std::bit_width(c) - 1);
    if (b.buckets.size() <= level) b.buckets.resize(level + 1, 0);
    b.buckets[level] += c;
    b.total += c;
  }
  require(b.total > 0, "graph has no path of length 2");
  double best = -1.0;
  for (std::size_t level = 0; level < b.buckets.size(); ++level) {
    if (b.buckets[level] == 0) continue;
    const double score = std::log(static_cast<double>(b.buckets[level])) + exponent * static_cast<double>(level) * std::log(2.0);
    if (score > best + 1e-12) {
      best = score;
      b.s = std::uint64_t{1} << level;
      b.count = b.buckets[level];
    }
  }
  return b;
}

}  // namespace surplus
