#include <algorithm>
#include <cmath>
#include <limits>

#include "surplus/errors.hpp"
#include "surplus/oracle.hpp"
#include "surplus/parallel.hpp"
#include "surplus/rng.hpp"
#include "surplus/sampling.hpp"

namespace surplus {

SparseSetResult sparse_set_cut(const Graph& g, const std::vector<Vertex>& S, std::uint64_t seed, std::size_t trials) {
  if (S.empty()) throw UsageError("sparse set must be non-empty");
  if (trials == 0) throw UsageError("trials must be at least 1");
  require(is_regular(g), "graph is not regular");
  const std::size_t n = g.num_vertices();
  for (Vertex v : S)
    if (v >= n) throw UsageError("sparse set vertex out of range");
  const double d = static_cast<double>(g.degree(0));
  VertexSet in_s0(n);
  for (Vertex v : S) in_s0.set(v);
  SparseSetResult res;
  res.trials = trials;
  const double size = static_cast<double>(in_s0.count());
  res.target = 0.5 * (size * size * d / (2.0 * static_cast<double>(n)) - static_cast<double>(edges_within(g, in_s0)));

  struct Trial {
    Cut cut;
    std::int64_t q = 0;
  };
  std::vector<Trial> outs(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    const double rate = size / static_cast<double>(n);
    std::vector<std::uint8_t> in_s(n, 0), in_t(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      in_s[v] = in_s0.test(v);
      in_t[v] = rng.bernoulli(rate);
    }
    auto q_value = [&] {
      std::int64_t q = 0;
      for (const Edge& e : g.edges()) {
        q += (in_s[e.u] && in_t[e.v]) + (in_t[e.u] && in_s[e.v]);
        q -= (in_s[e.u] && in_s[e.v]) + (in_t[e.u] && in_t[e.v]);
      }
      return q;
    };
    std::int64_t q = q_value();
    for (Vertex v = 0; v < n; ++v) {
      if (!in_s[v] || !in_t[v]) continue;
      std::size_t ns = 0, nt = 0;
      for (Vertex w : g.neighbors(v)) {
        ns += in_s[w];
        nt += in_t[w];
      }
      if (ns >= nt)
        in_s[v] = 0;
      else
        in_t[v] = 0;
      const std::int64_t next = q_value();
      check_invariant(next >= q, "overlap removal decreased e(S,T) - e(S) - e(T)");
      q = next;
    }
    std::vector<Vertex> part;
    std::vector<std::uint8_t> side;
    for (Vertex v = 0; v < n; ++v)
      if (in_s[v] || in_t[v]) {
        part.push_back(v);
        side.push_back(in_t[v]);
      }
    Cut cut = Cut::all_on_one_side(g);
    if (!part.empty()) {
      const Graph sub = induced_subgraph(g, part);
      const Cut sub_cut(sub, std::move(side));
      check_invariant(sub_cut.surplus().twice() == q, "sparse-set cut surplus differs from Q/2");
      cut = lift_cut(g, part, sub_cut);
    }
    outs[t].cut = Cut(g, flip_to_local_optimum(g, cut.sides()));
    outs[t].q = q;
  });
  std::size_t best = 0;
  for (std::size_t t = 1; t < trials; ++t)
    if (outs[t].cut.crossing() > outs[best].cut.crossing()) best = t;
  res.cut = std::move(outs[best].cut);
  res.best_q = outs[best].q;
  return res;
}

namespace {

// Position of w in the sorted neighbour list of u.
std::size_t slot(const Graph& g, Vertex u, Vertex w) {
  const auto nb = g.neighbors(u);
  return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
}

}  // namespace

TrimmingResult codegree_trimming_cut(const Graph& g, std::uint64_t seed, std::size_t draws) {
  require(is_regular(g), "graph is not regular");
  const std::size_t n = g.num_vertices();
  require(n > 0, "graph has no vertices");
  const double d = static_cast<double>(g.degree(0));
  require(2.0 * d <= static_cast<double>(n), "codegree trimming needs d <= n/2");
  TrimmingResult res;
  res.N = static_cast<double>(n) * d;
  res.D = d * d / static_cast<double>(n);

  // z = (u, v) is indexed by offset[u] + slot of v in N(u); d_H(z) = d(u,v).
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) offset[u + 1] = offset[u] + g.degree(u);
  const std::size_t nh = offset[n];
  std::vector<double> dplus(nh, 0.0);
  std::vector<std::uint32_t> dh(nh, 0);
  for (Vertex u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      dh[offset[u] + i] = static_cast<std::uint32_t>(codegree(g, u, nb[i]));
      res.e_h += dh[offset[u] + i];
    }
  }
  check_invariant(res.e_h % 2 == 0, "aux graph degree sum is odd");
  res.e_h /= 2;
  check_invariant(res.e_h == 3 * triangle_count(g), "e(H) differs from 3 t(G)");
  for (std::size_t z = 0; z < nh; ++z) {
    dplus[z] = std::max(static_cast<double>(dh[z]) - res.D, 0.0);
    if (static_cast<double>(dh[z]) <= 20.0 * res.D) res.q_mass += std::pow(dplus[z], 3);
  }
  const double gain = res.D > 0.0 ? res.c * res.q_mass / (res.D * res.D) : 0.0;
  res.hypothesis = static_cast<double>(res.e_h) <= res.N * res.D / 2.0 + gain;

  const OracleResult greedy = local_search(g, derive_seed(seed, "fallback"), 4);
  res.cut = greedy.witness;
  if (res.q_mass <= 0.0) {
    res.fallback = true;
    res.reason = "no positive Delta_+ mass below 20D";
    return res;
  }

  // Level i holds Delta_+ in (2^-i 20D, 2^-(i-1) 20D]; pick argmax of mass_i 2^i.
  std::vector<double> mass;
  std::vector<unsigned> level_of(nh, 0);
  for (std::size_t z = 0; z < nh; ++z) {
    if (dplus[z] <= 0.0 || static_cast<double>(dh[z]) > 20.0 * res.D) continue;
    unsigned i = 1;
    while (dplus[z] <= std::ldexp(20.0 * res.D, -static_cast<int>(i))) ++i;
    level_of[z] = i;
    if (mass.size() <= i) mass.resize(i + 1, 0.0);
    mass[i] += std::pow(dplus[z], 3);
  }
  double best_score = -1.0;
  for (unsigned i = 1; i < mass.size(); ++i) {
    const double score = std::ldexp(mass[i], static_cast<int>(i));
    if (score > best_score) {
      best_score = score;
      res.level = i;
    }
  }
  res.level_mass = mass[res.level];
  check_invariant(res.level_mass >= std::ldexp(res.q_mass, -static_cast<int>(res.level)) * (1.0 - 1e-12),
                  "selected level holds less than q/2^i");
  res.p = std::ldexp(1.0, -static_cast<int>(res.level));

  std::vector<std::uint8_t> best_removed;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < std::max<std::size_t>(draws, 1); ++t) {
    Rng rng(derive_seed(seed, t));
    std::vector<std::uint8_t> removed(nh, 0);
    std::size_t kept = nh;
    for (std::size_t z = 0; z < nh; ++z)
      if (level_of[z] == res.level && rng.bernoulli(res.p)) {
        removed[z] = 1;
        --kept;
      }
    std::size_t e_t = 0;
    for (Vertex u = 0; u < n; ++u) {
      const auto nb = g.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (removed[offset[u] + i]) continue;
        for (Vertex w : g.neighbors(nb[i]))
          if (w > nb[i] && g.adjacent(u, w) && !removed[offset[u] + slot(g, u, w)]) ++e_t;
      }
    }
    const double tk = static_cast<double>(kept);
    const double value = static_cast<double>(e_t) - tk * tk * res.D / (2.0 * res.N);
    if (value < best_value) {
      best_value = value;
      best_removed = std::move(removed);
      res.t_size = tk;
      res.e_h_t = static_cast<double>(e_t);
    }
  }
  res.target_met = res.hypothesis && best_value <= -gain;

  double best_slice = std::numeric_limits<double>::infinity();
  for (Vertex u = 0; u < n; ++u) {
    std::vector<Vertex> s;
    const auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (!best_removed[offset[u] + i]) s.push_back(nb[i]);
    VertexSet vs(n);
    for (Vertex v : s) vs.set(v);
    const std::size_t e_s = edges_within(g, vs);
    const double sz = static_cast<double>(s.size());
    const double value = static_cast<double>(e_s) - sz * sz * d / (2.0 * static_cast<double>(n));
    if (value < best_slice) {
      best_slice = value;
      res.w = u;
      res.S = std::move(s);
      res.e_s = e_s;
    }
  }
  const double sz = static_cast<double>(res.S.size());
  res.slice_bound = sz * sz * d / (2.0 * static_cast<double>(n)) - gain / static_cast<double>(n);
  if (res.target_met)
    check_invariant(static_cast<double>(res.e_s) <= res.slice_bound + 1e-9, "slice misses the e_G(S) bound");
  if (!res.hypothesis) {
    res.fallback = true;
    res.reason = "e(H) exceeds ND/2 + c q/D^2";
  } else if (!res.target_met) {
    res.fallback = true;
    res.reason = "no draw met the e_H(T) target";
  }
  if (!res.S.empty()) {
    SparseSetResult sp = sparse_set_cut(g, res.S, derive_seed(seed, "sparse"));
    res.sparse_target = sp.target;
    if (sp.cut.crossing() > res.cut.crossing()) res.cut = std::move(sp.cut);
  }
  return res;
}

}  // namespace surplus
