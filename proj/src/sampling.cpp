#include "surplus/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "surplus/errors.hpp"
#include "surplus/oracle.hpp"
#include "surplus/parallel.hpp"
#include "surplus/rng.hpp"

namespace surplus {

namespace {

using Preimage = std::function<std::span<const Vertex>(Vertex)>;

struct TrialOutput {
  SamplingTrial stats;
  Cut cut;
  std::vector<std::vector<Vertex>> a_parts, b_parts;
};

TrialOutput run_trial(const Graph& g, const SamplingPlan& plan, const Preimage& preimage, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = plan.k;
  Rng rng(seed);
  std::vector<std::size_t> label(n);
  for (Vertex v = 0; v < n; ++v) {
    const double u = rng.uniform();
    if (u < 1.0 / 3.0) {
      label[v] = 0;
      continue;
    }
    const double j = plan.p > 0.0 ? std::floor((u - 1.0 / 3.0) / plan.p) : static_cast<double>(k);
    label[v] = j < static_cast<double>(k) ? static_cast<std::size_t>(j) + 1 : k + 1;
  }
  std::vector<Vertex> centers(k);
  for (auto& c : centers) c = static_cast<Vertex>(rng.below(n));

  std::vector<std::uint32_t> hits(n, 0);
  std::vector<std::size_t> owner(n, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (Vertex u : preimage(centers[j])) {
      ++hits[u];
      owner[u] = j + 1;
    }
  // part[v] = j in 1..k, role 0 for A_j and 1 for B_j.
  std::vector<std::size_t> part(n, 0);
  std::vector<std::uint8_t> role(n, 0);
  TrialOutput out;
  out.a_parts.assign(k, {});
  out.b_parts.assign(k, {});
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == 0 && hits[v] == 1) {
      part[v] = owner[v];
      out.a_parts[owner[v] - 1].push_back(v);
    } else if (label[v] >= 1 && label[v] <= k) {
      part[v] = label[v];
      role[v] = 1;
      out.b_parts[label[v] - 1].push_back(v);
    }
  }
  for (const Edge& e : g.edges()) {
    if (part[e.u] == 0 || part[e.u] != part[e.v]) continue;
    if (role[e.u] != role[e.v])
      ++out.stats.x;
    else if (role[e.u] == 0)
      ++out.stats.y;
    else
      ++out.stats.z;
  }
  std::vector<std::vector<Vertex>> parts;
  std::vector<Cut> cuts;
  std::vector<std::vector<Vertex>> a_kept, b_kept;
  for (std::size_t j = 0; j < k; ++j) {
    if (out.a_parts[j].empty() && out.b_parts[j].empty()) continue;
    std::vector<Vertex> vs = out.a_parts[j];
    vs.insert(vs.end(), out.b_parts[j].begin(), out.b_parts[j].end());
    std::vector<std::uint8_t> side(out.a_parts[j].size(), 0);
    side.resize(vs.size(), 1);
    const Graph sub = induced_subgraph(g, vs);
    cuts.emplace_back(sub, flip_to_local_optimum(sub, std::move(side)));
    parts.push_back(std::move(vs));
    a_kept.push_back(std::move(out.a_parts[j]));
    b_kept.push_back(std::move(out.b_parts[j]));
  }
  out.a_parts = std::move(a_kept);
  out.b_parts = std::move(b_kept);
  out.cut = combine_cuts(g, parts, cuts);
  out.stats.crossing = out.cut.crossing();
  out.stats.surplus = out.cut.surplus();
  check_invariant(out.stats.surplus.twice() >= out.stats.x - out.stats.y - out.stats.z,
                  "sampling cut surplus fell below (X - Y - Z)/2");
  return out;
}

SamplingCutResult run_sampling(const Graph& g, const SamplingPlan& plan, const Preimage& preimage, std::uint64_t seed,
                               std::size_t trials) {
  if (trials == 0) throw UsageError("trials must be at least 1");
  check_invariant(static_cast<double>(plan.k) * plan.p <= 2.0 / 3.0 + 1e-12, "label plan infeasible: k p > 2/3");
  std::vector<TrialOutput> outs(trials);
  parallel_for(trials, [&](std::size_t t) { outs[t] = run_trial(g, plan, preimage, derive_seed(seed, t)); });
  SamplingCutResult res;
  res.plan = plan;
  res.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    res.per_trial.push_back(outs[t].stats);
    if (outs[t].stats.crossing > outs[res.best_trial].stats.crossing) res.best_trial = t;
  }
  auto& best = outs[res.best_trial];
  res.cut = std::move(best.cut);
  res.a_parts = std::move(best.a_parts);
  res.b_parts = std::move(best.b_parts);
  return res;
}

}  // namespace

SamplingCutResult triangle_sampling_cut(const Graph& g, double epsilon, std::optional<double> C, std::uint64_t seed,
                                        std::size_t trials) {
  if (!(epsilon > 0.0)) throw UsageError("epsilon must be positive");
  const std::size_t n = g.num_vertices();
  require(n > 0, "graph has no vertices");
  const auto stats = degree_stats(g);
  const double d = stats.average;
  require(d >= 1.0, "triangle sampling needs average degree d >= 1");
  const double ratio = static_cast<double>(stats.max) / d;
  const double c = C.value_or(ratio);
  require(c > 0.0 && ratio <= c * (1.0 + 1e-12), "maximum degree exceeds C d");
  SamplingPlan plan;
  plan.k = static_cast<std::size_t>(std::ceil(epsilon / (4.0 * c) * static_cast<double>(n) / d));
  plan.p = d / (3.0 * static_cast<double>(n));
  return run_sampling(g, plan, [&g](Vertex v) { return g.neighbors(v); }, seed, trials);
}

SamplingPlan bucket_sampling_plan(const Graph& g, const BucketSets& sets, double mu) {
  const double n = static_cast<double>(g.num_vertices());
  require(sets.size() == g.num_vertices(), "bucket sets built for a different graph");
  require(!sets.all_empty(), "all bucket sets are empty");
  require(sets.d > 0.0, "graph has no edges");
  SamplingPlan plan;
  if (sets.kind == BucketKind::c5_codegree) {
    plan.k = static_cast<std::size_t>(std::ceil(sets.s * n / (2.0 * sets.d * sets.d)));
    plan.p = sets.nu * sets.d * sets.d / (10.0 * sets.s * n);
  } else {
    if (!(mu > 0.0)) throw UsageError("mu must be positive");
    const double dq = std::pow(static_cast<double>(sets.max_degree), sets.q);
    plan.k = static_cast<std::size_t>(std::ceil(sets.s * n / (2.0 * dq)));
    plan.p = mu * sets.nu * std::pow(sets.d, sets.q) / (sets.s * n);
  }
  plan.k = std::max<std::size_t>(plan.k, 1);
  if (static_cast<double>(plan.k) * plan.p > 2.0 / 3.0) {
    plan.p = 2.0 / (3.0 * static_cast<double>(plan.k));
    plan.clamped = true;
  }
  return plan;
}

SamplingCutResult bucket_neighborhood_cut(const Graph& g, const BucketSets& sets, std::uint64_t seed,
                                          std::size_t trials, double mu) {
  const SamplingPlan plan = bucket_sampling_plan(g, sets, mu);
  const auto inv = sets.s_preimages();
  return run_sampling(g, plan, [&inv](Vertex v) { return std::span<const Vertex>(inv[v]); }, seed, trials);
}

}  // namespace surplus
