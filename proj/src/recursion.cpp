#include <algorithm>
#include <cmath>
#include <sstream>

#include "surplus/errors.hpp"
#include "surplus/oracle.hpp"
#include "surplus/rng.hpp"
#include "surplus/sampling.hpp"

namespace surplus {

namespace {

RecursiveCutResult trivial(const Graph& g, const std::string& why) {
  RecursiveCutResult res;
  res.cut = Cut::all_on_one_side(g);
  res.log.push_back(why);
  return res;
}

// Cut of a graph with average degree in (0, 1): single flips from one side.
RecursiveCutResult sparse_local(const Graph& g) {
  RecursiveCutResult res;
  res.cut = Cut(g, flip_to_local_optimum(g, std::vector<std::uint8_t>(g.num_vertices(), 0)));
  res.log.push_back("average degree below 1: local optimum");
  return res;
}

RecursiveCutResult kr_rec(const Graph& g, unsigned r, double eps, std::uint64_t seed, std::size_t restarts,
                          std::size_t trials) {
  if (g.num_edges() == 0) return trivial(g, "no edges");
  if (average_degree(g) < 1.0) return sparse_local(g);
  if (r == 3) {
    RecursiveCutResult res;
    res.cut = triangle_sampling_cut(g, eps, std::nullopt, seed, trials).cut;
    res.log.push_back("r=3: triangle sampling on " + std::to_string(g.num_vertices()) + " vertices");
    return res;
  }
  const auto params = RegularizationParams::make(-(static_cast<double>(r) - 3.0), r - 1.0, eps / r);
  RegularizationResult reg = regularize(g, params, derive_seed(seed, "regularize"));
  if (reg.cut) {
    RecursiveCutResult res;
    res.cut = std::move(*reg.cut);
    res.log.push_back("r=" + std::to_string(r) + ": regularization emitted a cut");
    return res;
  }
  const Graph& h = reg.subgraph;
  if (h.num_edges() == 0) return trivial(g, "regularized subgraph has no edges");
  const double dh = average_degree(h);
  if (dh < 1.0) {
    RecursiveCutResult sub = sparse_local(h);
    sub.cut = lift_cut(g, reg.vertices, sub.cut);
    return sub;
  }
  const std::size_t nh = h.num_vertices();
  const double C = std::max(static_cast<double>(degree_stats(h).max) / dh, 1.0);
  const auto k = static_cast<std::size_t>(
      std::ceil(eps / (8.0 * C * r * r) * static_cast<double>(nh) / dh));

  RecursiveCutResult best;
  bool have = false;
  for (std::size_t t = 0; t < std::max<std::size_t>(restarts, 1); ++t) {
    Rng rng(derive_seed(seed, t));
    std::vector<Vertex> centers(k);
    for (auto& c : centers) c = static_cast<Vertex>(rng.below(nh));
    std::vector<std::uint32_t> hits(nh, 0);
    std::vector<std::size_t> owner(nh, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (Vertex u : h.neighbors(centers[i])) {
        ++hits[u];
        owner[u] = i;
      }
    std::vector<std::vector<Vertex>> parts(k);
    for (Vertex u = 0; u < nh; ++u)
      if (hits[u] == 1) parts[owner[u]].push_back(u);
    std::vector<std::vector<Vertex>> kept;
    std::vector<Cut> cuts;
    std::size_t depth = 0;
    std::vector<std::string> log;
    for (std::size_t i = 0; i < k; ++i) {
      if (parts[i].empty()) continue;
      const Graph sub = induced_subgraph(h, parts[i]);
      RecursiveCutResult child = parts[i].size() == 1
                                     ? trivial(sub, "single vertex")
                                     : kr_rec(sub, r - 1, eps, derive_seed(seed, t, i), restarts, trials);
      depth = std::max(depth, child.depth + 1);
      cuts.push_back(std::move(child.cut));
      kept.push_back(std::move(parts[i]));
    }
    std::ostringstream line;
    line << "r=" << r << " restart " << t << ": k=" << k << ", " << kept.size() << " non-empty neighbourhoods";
    log.push_back(line.str());
    RecursiveCutResult cand;
    cand.cut = lift_cut(g, reg.vertices, combine_cuts(h, kept, cuts));
    cand.depth = depth;
    cand.log = std::move(log);
    if (!have || cand.cut.crossing() > best.cut.crossing()) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

}  // namespace

RecursiveCutResult kr_recursive_cut(const Graph& g, unsigned r, double epsilon, std::uint64_t seed,
                                    std::size_t restarts, std::size_t trials) {
  if (r < 3) throw UsageError("clique size r must be at least 3");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw UsageError("epsilon must lie in (0, 1)");
  return kr_rec(g, r, epsilon, seed, restarts, trials);
}

RecursiveCutResult composite_kr_cut(const Graph& g, unsigned r, std::uint64_t seed, std::size_t trials) {
  if (r < 3) throw UsageError("clique size r must be at least 3");
  const std::size_t m = g.num_edges();
  if (m == 0) return trivial(g, "empty graph");
  const double dstar = std::pow(static_cast<double>(m), (r - 1.0) / (2.0 * r - 1.0));
  const GoodPartition gp = good_partition(g, dstar);
  VertexSet s(g.num_vertices()), t(g.num_vertices());
  for (Vertex v : gp.order) s.set(v);
  for (Vertex v : gp.high) t.set(v);
  const std::size_t e_s = edges_within(g, s), e_t = edges_within(g, t), e_st = edges_between(g, s, t);
  check_invariant(e_s + e_t + e_st == m, "partition edge counts do not add up to m");

  RecursiveCutResult best;
  std::ostringstream head;
  head << "d*=" << dstar << " |S|=" << gp.order.size() << " |T|=" << gp.high.size() << " e(S)=" << e_s
       << " e(T)=" << e_t << " e(S,T)=" << e_st;
  std::vector<std::string> log{head.str()};
  bool have = false;
  auto consider = [&](Cut cut, const std::string& name, std::size_t depth) {
    log.push_back(name + ": surplus " + cut.surplus().str());
    if (!have || cut.crossing() > best.cut.crossing()) {
      best.cut = std::move(cut);
      best.depth = depth;
      have = true;
    }
  };
  const double eps = 0.1;
  if (3 * e_st >= 2 * m) {
    std::vector<std::uint8_t> side(g.num_vertices(), 0);
    for (Vertex v : gp.high) side[v] = 1;
    consider(Cut(g, std::move(side)), "cross branch S|T", 0);
  }
  if (6 * e_s >= m) {
    const Graph sub = induced_subgraph(g, gp.order);
    RecursiveCutResult part = kr_recursive_cut(sub, r, eps, derive_seed(seed, "sparse"), 4, trials);
    consider(lift_cut(g, gp.order, part.cut), "degenerate branch G[S]", part.depth);
  }
  if (6 * e_t >= m) {
    const Graph sub = induced_subgraph(g, gp.high);
    RecursiveCutResult part = kr_recursive_cut(sub, r, eps, derive_seed(seed, "dense"), 4, trials);
    consider(lift_cut(g, gp.high, part.cut), "min-degree branch G[T]", part.depth);
  }
  check_invariant(have, "no composite branch applies");
  best.log = std::move(log);
  return best;
}

}  // namespace surplus
