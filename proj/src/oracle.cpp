#include "surplus/oracle.hpp"

#include <atomic>
#include <bit>

#include "surplus/errors.hpp"
#include "surplus/parallel.hpp"
#include "surplus/rng.hpp"

namespace surplus {

std::string_view to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::exhaustive: return "exhaustive";
    case OracleMethod::branch_bound: return "branch_bound";
    case OracleMethod::local_search_lower_bound: return "local_search_lower_bound";
  }
  return "?";
}

namespace {

struct Masks {
  std::size_t n;
  std::uint32_t all;
  std::vector<std::uint32_t> nbr;
};

Masks masks_of(const Graph& g) {
  Masks mk{g.num_vertices(), 0, std::vector<std::uint32_t>(g.num_vertices(), 0)};
  mk.all = mk.n == 32 ? ~0U : (1U << mk.n) - 1;
  for (Vertex v = 0; v < mk.n; ++v)
    for (Vertex w : g.neighbors(v)) mk.nbr[v] |= 1U << w;
  return mk;
}

// Key ordering side vectors lexicographically: vertex v sits at bit n-1-v.
std::uint32_t lex_key(std::uint32_t set1, std::size_t n) {
  std::uint32_t k = 0;
  for (std::size_t v = 0; v < n; ++v)
    if ((set1 >> v) & 1U) k |= 1U << (n - 1 - v);
  return k;
}

std::size_t crossing_of(const Masks& mk, std::uint32_t set1) {
  std::size_t c = 0;
  for (std::size_t v = 0; v < mk.n; ++v)
    if ((set1 >> v) & 1U) c += std::popcount(mk.nbr[v] & ~set1 & mk.all);
  return c;
}

struct Best {
  std::size_t crossing = 0;
  std::uint32_t key = ~0U;
  std::uint32_t set1 = 0;
  bool found = false;
  bool better_than(const Best& o) const {
    if (!found) return false;
    if (!o.found) return true;
    return crossing > o.crossing || (crossing == o.crossing && key < o.key);
  }
};

OracleResult finish(const Graph& g, std::uint32_t set1, OracleMethod method) {
  std::vector<std::uint8_t> side(g.num_vertices(), 0);
  for (std::size_t v = 0; v < side.size(); ++v) side[v] = (set1 >> v) & 1U;
  OracleResult r;
  r.witness = Cut(g, std::move(side));
  r.mc = r.witness.crossing();
  r.method = method;
  r.exact = true;
  return r;
}

OracleResult trivial(const Graph& g) {
  OracleResult r;
  r.witness = Cut::all_on_one_side(g);
  return r;
}

OracleResult enumerate(const Graph& g) {
  const Masks mk = masks_of(g);
  const std::size_t n = mk.n;
  const std::size_t free_bits = n - 1;
  const std::size_t top = std::min<std::size_t>(free_bits, 6);
  const std::size_t low = free_bits - top;
  const std::size_t blocks = std::size_t{1} << top;
  std::vector<Best> results(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    // Vertices 1..low are Gray-coded; vertices low+1..n-1 come from b.
    std::uint32_t set1 = static_cast<std::uint32_t>(b) << (low + 1);
    std::size_t cross = crossing_of(mk, set1);
    std::uint32_t key = lex_key(set1, n);
    Best best{cross, key, set1, true};
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < steps; ++i) {
      const unsigned v = 1 + std::countr_zero(i);
      const std::uint32_t bit = 1U << v;
      const std::uint32_t same_side = (set1 & bit) ? set1 : (~set1 & mk.all);
      const int same = std::popcount(mk.nbr[v] & same_side);
      const int deg = std::popcount(mk.nbr[v]);
      cross = static_cast<std::size_t>(static_cast<int>(cross) + 2 * same - deg);
      set1 ^= bit;
      key ^= 1U << (n - 1 - v);
      if (cross > best.crossing || (cross == best.crossing && key < best.key)) best = {cross, key, set1, true};
    }
    results[b] = best;
  });
  Best best;
  for (const auto& r : results)
    if (r.better_than(best)) best = r;
  return finish(g, best.set1, OracleMethod::exhaustive);
}

struct BranchBound {
  const Masks& mk;
  std::atomic<std::size_t>& global;
  std::size_t local_best;  // prune when bound <= local_best
  Best best;

  std::size_t bound(std::uint32_t assigned, std::uint32_t set1, std::size_t cross) const {
    const std::uint32_t set0 = assigned & ~set1;
    const std::uint32_t rest = mk.all & ~assigned;
    std::size_t extra = 0, inner = 0;
    for (std::uint32_t r = rest; r; r &= r - 1) {
      const unsigned w = std::countr_zero(r);
      extra += std::max(std::popcount(mk.nbr[w] & set1), std::popcount(mk.nbr[w] & set0));
      inner += std::popcount(mk.nbr[w] & rest);
    }
    return cross + extra + inner / 2;
  }

  void dfs(unsigned v, std::uint32_t assigned, std::uint32_t set1, std::size_t cross) {
    if (v == mk.n) {
      const std::uint32_t key = lex_key(set1, mk.n);
      if (!best.found || cross > best.crossing) {
        best = {cross, key, set1, true};
        local_best = cross;
        std::size_t g = global.load();
        while (cross > g && !global.compare_exchange_weak(g, cross)) {
        }
      }
      return;
    }
    const std::size_t ub = bound(assigned, set1, cross);
    if (ub <= local_best || ub < global.load()) return;
    const std::uint32_t bit = 1U << v;
    const std::uint32_t set0 = assigned & ~set1;
    dfs(v + 1, assigned | bit, set1, cross + std::popcount(mk.nbr[v] & set1));
    dfs(v + 1, assigned | bit, set1 | bit, cross + std::popcount(mk.nbr[v] & set0));
  }
};

}  // namespace

std::vector<std::uint8_t> flip_to_local_optimum(const Graph& g, std::vector<std::uint8_t> side) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> same(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) same[v] += side[v] == side[w];
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < n; ++v) {
      if (2 * same[v] <= g.degree(v)) continue;
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == side[v])
          --same[w];
        else
          ++same[w];
      }
      side[v] ^= 1;
      same[v] = g.degree(v) - same[v];
      improved = true;
    }
  }
  return side;
}

OracleResult local_search(const Graph& g, std::uint64_t seed, std::size_t restarts) {
  if (restarts == 0) throw UsageError("local_search: restarts must be positive");
  const std::size_t n = g.num_vertices();
  std::vector<Cut> cuts(restarts);
  parallel_for(restarts, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    std::vector<std::uint8_t> side(n);
    for (auto& s : side) s = static_cast<std::uint8_t>(rng() >> 63);
    cuts[i] = Cut(g, flip_to_local_optimum(g, std::move(side)));
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < restarts; ++i)
    if (cuts[i].crossing() > cuts[best].crossing()) best = i;
  OracleResult r;
  r.witness = cuts[best];
  r.mc = r.witness.crossing();
  r.method = OracleMethod::local_search_lower_bound;
  r.exact = false;
  return r;
}

OracleResult max_cut_branch_bound(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kOracleCap) throw PreconditionError("exact oracle: n = " + std::to_string(n) + " exceeds the cap of 30");
  if (n <= 1) return trivial(g);
  const Masks mk = masks_of(g);
  const std::size_t incumbent = local_search(g, 0x5eed, 16).mc;
  std::atomic<std::size_t> global{incumbent};
  // Split on the sides of vertices 1..top; tasks are in lexicographic order.
  const std::size_t top = std::min<std::size_t>(n - 1, 6);
  const std::size_t tasks = std::size_t{1} << top;
  std::vector<Best> results(tasks);
  parallel_for(tasks, [&](std::size_t t) {
    std::uint32_t assigned = 1, set1 = 0;
    std::size_t cross = 0;
    for (std::size_t i = 0; i < top; ++i) {
      const unsigned v = static_cast<unsigned>(i + 1);
      const bool one = (t >> (top - 1 - i)) & 1U;
      const std::uint32_t set0 = assigned & ~set1;
      cross += std::popcount(mk.nbr[v] & (one ? set0 : set1));
      assigned |= 1U << v;
      if (one) set1 |= 1U << v;
    }
    BranchBound bb{mk, global, incumbent - std::min<std::size_t>(incumbent, 1), {}};
    if (incumbent == 0) bb.local_best = 0;
    bb.dfs(static_cast<unsigned>(top + 1), assigned, set1, cross);
    if (incumbent == 0 && !bb.best.found) bb.best = {0, lex_key(0, n), 0, true};
    results[t] = bb.best;
  });
  Best best;
  for (const auto& r : results)
    if (r.better_than(best)) best = r;
  check_invariant(best.found, "branch and bound found no cut");
  return finish(g, best.set1, OracleMethod::branch_bound);
}

OracleResult max_cut_exact(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kOracleCap) throw PreconditionError("exact oracle: n = " + std::to_string(n) + " exceeds the cap of 30");
  if (n <= 1) return trivial(g);
  if (n <= kExhaustiveLimit) return enumerate(g);
  return max_cut_branch_bound(g);
}

}  // namespace surplus
