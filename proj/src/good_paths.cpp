#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>

#include "surplus/errors.hpp"
#include "surplus/parallel.hpp"
#include "surplus/rng.hpp"
#include "surplus/structure.hpp"

namespace surplus {

namespace {

constexpr std::uint64_t kWalkLimit = std::numeric_limits<std::int64_t>::max();

// walks[k][x*n + y] = h_k(x, y) for 1 <= k <= len.
struct WalkTable {
  std::size_t n = 0;
  std::vector<std::vector<std::uint64_t>> walks;
  std::uint64_t at(unsigned k, Vertex x, Vertex y) const { return walks[k][x * n + y]; }
  std::uint64_t total(unsigned k) const {
    std::uint64_t t = 0;
    for (auto w : walks[k])
      if (__builtin_add_overflow(t, w, &t)) return kWalkLimit;
    return t;
  }
};

WalkTable walk_table(const Graph& g, unsigned len) {
  const std::size_t n = g.num_vertices();
  require(n <= 4096, "good-path machinery is limited to 4096 vertices");
  WalkTable t;
  t.n = n;
  t.walks.resize(len + 1);
  t.walks[1].assign(n * n, 0);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbors(x)) t.walks[1][x * n + y] = 1;
  for (unsigned k = 2; k <= len; ++k) {
    t.walks[k].assign(n * n, 0);
    const auto& prev = t.walks[k - 1];
    auto& cur = t.walks[k];
    parallel_for(n, [&](std::size_t x) {
      for (Vertex y = 0; y < n; ++y) {
        std::uint64_t s = 0;
        for (Vertex z : g.neighbors(y))
          if (__builtin_add_overflow(s, prev[x * n + z], &s) || s > kWalkLimit)
            throw Error("walk count exceeds 2^63 - 1");
        cur[x * n + y] = s;
      }
    });
  }
  return t;
}

unsigned floor_log2(std::uint64_t x) { return static_cast<unsigned>(std::bit_width(x) - 1); }

using Signature = std::vector<std::uint8_t>;

// Pairs (i, j) with j - i >= 2, in (i, j) lexicographic order.
std::vector<std::pair<unsigned, unsigned>> long_pairs(unsigned ell) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 0; i <= ell; ++i)
    for (unsigned j = i + 2; j <= ell; ++j) out.emplace_back(i, j);
  return out;
}

Signature signature_of(const WalkTable& w, std::span<const Vertex> path,
                       const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  Signature s;
  s.reserve(pairs.size());
  for (auto [i, j] : pairs) s.push_back(static_cast<std::uint8_t>(floor_log2(w.at(j - i, path[i], path[j]))));
  return s;
}

// Exact counts of ordered ell-paths per signature.
std::map<Signature, double> enumerate_signatures(const Graph& g, const WalkTable& w, unsigned ell) {
  const std::size_t n = g.num_vertices();
  const auto pairs = long_pairs(ell);
  std::vector<std::map<Signature, std::uint64_t>> per_start(n);
  parallel_for(n, [&](std::size_t start) {
    std::vector<Vertex> path{static_cast<Vertex>(start)};
    auto& counts = per_start[start];
    auto rec = [&](auto&& self) -> void {
      if (path.size() == ell + 1) {
        ++counts[signature_of(w, path, pairs)];
        return;
      }
      for (Vertex x : g.neighbors(path.back())) {
        if (std::find(path.begin(), path.end(), x) != path.end()) continue;
        path.push_back(x);
        self(self);
        path.pop_back();
      }
    };
    rec(rec);
  });
  std::map<Signature, double> out;
  for (const auto& m : per_start)
    for (const auto& [sig, c] : m) out[sig] += static_cast<double>(c);
  return out;
}

// Knuth's estimator: a uniformly random start followed by uniformly random
// unvisited neighbours, weighted by n times the product of branching factors.
std::map<Signature, double> sample_signatures(const Graph& g, const WalkTable& w, unsigned ell, std::uint64_t seed,
                                              std::size_t samples) {
  const std::size_t n = g.num_vertices();
  const auto pairs = long_pairs(ell);
  std::map<Signature, double> out;
  std::vector<Vertex> path, options;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, i));
    path.assign(1, static_cast<Vertex>(rng.below(n)));
    double weight = static_cast<double>(n);
    while (path.size() <= ell) {
      options.clear();
      for (Vertex x : g.neighbors(path.back()))
        if (std::find(path.begin(), path.end(), x) == path.end()) options.push_back(x);
      if (options.empty()) {
        weight = 0.0;
        break;
      }
      weight *= static_cast<double>(options.size());
      path.push_back(options[rng.below(options.size())]);
    }
    if (weight > 0.0) out[signature_of(w, path, pairs)] += weight / static_cast<double>(samples);
  }
  return out;
}

bool window_ok(const WalkTable& w, const GoodPathProfile& prof, std::span<const Vertex> path) {
  const unsigned j = static_cast<unsigned>(path.size() - 1);
  for (unsigned i = 0; i + 1 < j; ++i) {
    const std::uint64_t h = w.at(j - i, path[i], path[j]);
    if (h < prof.s[i][j] || h >= 2 * prof.s[i][j]) return false;
  }
  return true;
}

// Calls visit(path) for every good path of length len whose vertex i lies in
// layer i (or anywhere when layer is empty), DFS in ascending order.
template <class Visit>
void for_each_good_path(const Graph& g, const WalkTable& w, const GoodPathProfile& prof, unsigned len,
                        const std::vector<std::uint8_t>& layer, Visit&& visit) {
  std::vector<Vertex> path;
  auto rec = [&](auto&& self) -> void {
    if (path.size() == len + 1) {
      visit(path);
      return;
    }
    const auto next = static_cast<std::uint8_t>(path.size());
    for (Vertex x : g.neighbors(path.back())) {
      if (!layer.empty() && layer[x] != next) continue;
      if (layer.empty() && std::find(path.begin(), path.end(), x) != path.end()) continue;
      path.push_back(x);
      if (window_ok(w, prof, path)) self(self);
      path.pop_back();
    }
  };
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!layer.empty() && layer[v] != 0) continue;
    path.assign(1, v);
    rec(rec);
  }
}

}  // namespace

GoodPathProfile good_path_profile(const Graph& g, unsigned r, std::uint64_t seed, const GoodPathOptions& opts) {
  if (r < 5 || r % 2 == 0) throw UsageError("odd cycle length r must be odd and at least 5");
  GoodPathProfile prof;
  prof.r = r;
  prof.ell = (r - 1) / 2;
  prof.n = g.num_vertices();
  prof.max_degree = g.num_vertices() ? degree_stats(g).max : 0;
  prof.average_degree = g.num_vertices() ? average_degree(g) : 0.0;
  prof.epsilon = opts.epsilon.value_or(
      1.0 / (40.0 * prof.ell * prof.ell * std::log2(static_cast<double>(prof.max_degree) + 2.0)));
  prof.q = opts.q.value_or(prof.ell);
  if (prof.q < 2 || prof.q > prof.ell) throw UsageError("level q must satisfy 2 <= q <= l");
  const unsigned ell = prof.ell;

  const WalkTable w = walk_table(g, ell);
  const std::uint64_t walks = w.total(ell);
  std::map<Signature, double> counts;
  if (walks <= opts.path_cap) {
    counts = enumerate_signatures(g, w, ell);
  } else {
    if (!opts.allow_sampling) throw UsageError("path count exceeds the enumeration cap and sampling is disabled");
    prof.sampled = true;
    counts = sample_signatures(g, w, ell, derive_seed(seed, "paths"), opts.samples);
  }
  require(!counts.empty(), "graph has no path of length " + std::to_string(ell));

  const Signature* best = nullptr;
  double best_score = 0.0;
  unsigned best_sum = 0;
  for (const auto& [sig, c] : counts) {
    prof.total_paths += c;
    unsigned sum = 0;
    for (auto b : sig) sum += b;
    const double score = std::log(c) + prof.epsilon * sum * std::log(2.0);
    if (!best || score > best_score + 1e-12 || (std::abs(score - best_score) <= 1e-12 && sum < best_sum)) {
      best = &sig;
      best_score = score;
      best_sum = sum;
    }
  }
  prof.signature_count = counts.at(*best);
  prof.s.assign(ell + 1, std::vector<std::uint64_t>(ell + 1, 0));
  for (unsigned i = 0; i < ell; ++i) prof.s[i][i + 1] = 1;
  const auto pairs = long_pairs(ell);
  for (std::size_t k = 0; k < pairs.size(); ++k) prof.s[pairs[k].first][pairs[k].second] = std::uint64_t{1} << (*best)[k];
  prof.nu = std::pow(2.0, -prof.epsilon * best_sum);

  const unsigned q = prof.q;
  if (w.total(q) <= opts.path_cap) {
    std::uint64_t c = 0;
    for_each_good_path(g, w, prof, q, {}, [&](const std::vector<Vertex>&) { ++c; });
    prof.good_q_paths = static_cast<double>(c);
  } else {
    prof.good_q_paths = prof.signature_count;
  }
  prof.expected_a = prof.good_q_paths * std::pow(q + 1.0, -(q + 1.0));

  double best_gap = std::numeric_limits<double>::infinity();
  std::vector<std::uint8_t> best_layer;
  std::vector<Vertex> best_a;
  for (std::size_t t = 0; t < std::max<std::size_t>(opts.layer_draws, 1); ++t) {
    ++prof.layer_attempts;
    Rng rng(derive_seed(derive_seed(seed, "layers"), t));
    std::vector<std::uint8_t> layer(g.num_vertices());
    for (auto& x : layer) x = static_cast<std::uint8_t>(rng.below(q + 1));
    std::vector<Vertex> a;
    for_each_good_path(g, w, prof, q, layer, [&](const std::vector<Vertex>& p) { a.insert(a.end(), p.begin(), p.end()); });
    const double count = static_cast<double>(a.size() / (q + 1));
    const double gap = prof.expected_a <= 0.0 ? 0.0
                       : count == 0.0        ? std::numeric_limits<double>::max()
                                             : std::abs(std::log(count / prof.expected_a));
    if (gap < best_gap) {
      best_gap = gap;
      best_layer = std::move(layer);
      best_a = std::move(a);
    }
    if (best_gap <= std::log(2.0)) break;
  }
  prof.layer = std::move(best_layer);
  prof.A = std::move(best_a);
  for_each_good_path(g, w, prof, q - 1, prof.layer,
                     [&](const std::vector<Vertex>& p) { prof.B.insert(prof.B.end(), p.begin(), p.end()); });
  return prof;
}

bool tuple_is_good(const Graph& g, const GoodPathProfile& prof, std::span<const Vertex> tuple) {
  const std::size_t k = tuple.size();
  if (k < 2 || k > prof.ell + 1) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (tuple[i] == tuple[j]) return false;
      const std::uint64_t h = walk_count(g, tuple[i], tuple[j], static_cast<unsigned>(j - i));
      if (h < prof.s[i][j] || h >= 2 * prof.s[i][j]) return false;
    }
  return true;
}

namespace {

// count * 4 n Delta^q >= |A| s, exactly while Delta^q <= 2^62.
bool meets_threshold(std::uint64_t count, std::size_t n, std::size_t delta, unsigned q, std::size_t a, std::uint64_t s) {
  unsigned __int128 dq = 1;
  bool exact = true;
  for (unsigned i = 0; i < q && exact; ++i) {
    dq *= delta;
    exact = dq <= (static_cast<unsigned __int128>(1) << 62);
  }
  if (exact) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(count) * 4 * n * dq;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(a) * s;
    return lhs >= rhs;
  }
  const long double lhs = static_cast<long double>(count) * 4 * n * std::pow(static_cast<long double>(delta), q);
  return lhs >= static_cast<long double>(a) * s;
}

}  // namespace

BucketSets st_sets(const Graph& g, const GoodPathProfile& prof, unsigned q) {
  if (q < 2 || q > prof.ell || q != prof.q) throw UsageError("level q out of range for this profile");
  require(prof.n == g.num_vertices(), "profile built for a different graph");
  const std::size_t n = g.num_vertices();
  BucketSets b;
  b.kind = BucketKind::odd_cycle;
  b.q = q;
  b.s = static_cast<double>(prof.s[0][q]);
  b.s_prime = static_cast<double>(prof.s[0][q - 1]);
  b.nu = prof.nu;
  b.d = prof.average_degree;
  b.max_degree = prof.max_degree;
  b.S.assign(n, {});
  b.T.assign(n, {});
  const std::size_t a = prof.a_count();
  std::map<std::pair<Vertex, Vertex>, std::uint64_t> s_pairs, t_pairs;
  for (std::size_t i = 0; i < a; ++i) ++s_pairs[{prof.A[i * (q + 1) + q], prof.A[i * (q + 1)]}];
  for (std::size_t i = 0; i < prof.b_count(); ++i) ++t_pairs[{prof.B[i * q + q - 1], prof.B[i * q]}];
  for (const auto& [key, c] : s_pairs)
    if (meets_threshold(c, n, prof.max_degree, q, a, prof.s[0][q])) b.S[key.first].push_back(key.second);
  for (const auto& [key, c] : t_pairs)
    if (meets_threshold(c, n, prof.max_degree, q, a, prof.s[0][q - 1])) b.T[key.first].push_back(key.second);
  const long double dq = std::pow(static_cast<long double>(prof.max_degree), q);
  for (Vertex u = 0; u < n; ++u)
    check_invariant(static_cast<long double>(b.S[u].size()) * b.s <= dq, "|S(u)| s exceeds Delta^q");
  return b;
}

StSums st_intersection_sums(const Graph& g, const GoodPathProfile& prof, const BucketSets& sets) {
  StSums out;
  for (const Edge& e : g.edges()) {
    out.ss += sorted_intersection_size(sets.S[e.u], sets.S[e.v]);
    out.tt += sorted_intersection_size(sets.T[e.u], sets.T[e.v]);
    out.st += sorted_intersection_size(sets.S[e.u], sets.T[e.v]) + sorted_intersection_size(sets.T[e.u], sets.S[e.v]);
  }
  const unsigned q = prof.q;
  for (std::size_t i = 0; i < prof.a_count(); ++i) {
    const Vertex* t = prof.A.data() + i * (q + 1);
    const auto& tq1 = sets.T[t[q - 1]];
    const auto& sq = sets.S[t[q]];
    if (std::binary_search(tq1.begin(), tq1.end(), t[0]) && std::binary_search(sq.begin(), sq.end(), t[0])) ++out.good_half;
  }
  return out;
}

}  // namespace surplus
