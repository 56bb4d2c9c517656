#include "surplus/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "surplus/edge_list.hpp"
#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/oracle.hpp"
#include "surplus/rng.hpp"
#include "surplus/rounding.hpp"
#include "surplus/sampling.hpp"
#include "surplus/spectral.hpp"
#include "surplus/structure.hpp"
#include "surplus/vectors.hpp"

namespace surplus {

std::vector<NamedGraph> bundled_corpus() {
  std::vector<NamedGraph> c;
  auto add = [&c](std::string name) {
    Graph g = generate(GeneratorSpec::parse(name));
    c.push_back({std::move(name), std::move(g)});
  };
  for (int n = 3; n <= 7; ++n) add("complete " + std::to_string(n));
  for (int n = 4; n <= 9; ++n) add("cycle " + std::to_string(n));
  for (const char* s : {"path 6", "star 4", "petersen", "paley 5", "paley 13", "paley 17", "complete_bipartite 3 3",
                        "complete_bipartite 2 5", "multipartite 3 2", "multipartite 3 3", "blowup 2 cycle 5",
                        "blowup 2 cycle 7", "polarity 2", "polarity 3", "random_regular 12 3 seed=1",
                        "random_regular 16 4 seed=2", "triangle_free 14 0.4 seed=3", "bipartite_random 6 7 0.5 seed=4"})
    add(s);
  for (int i = 0; i < 8; ++i)
    add("gnp " + std::to_string(8 + i) + " 0.4 seed=" + std::to_string(100 + i));
  return c;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s = {"core", "rounding", "vectors", "structure", "sampling", "spectral", "all"};
  return s;
}

namespace {

using Failure = std::optional<std::string>;

class Runner {
 public:
  Runner(std::ostream& out, const std::vector<NamedGraph>& corpus) : out_(out), corpus_(corpus) {}

  // Runs pred on every corpus graph accepted by filter; reports the failing
  // instance with the fewest vertices, then edges.
  void check(const std::string& name, const std::function<bool(const Graph&)>& filter,
             const std::function<Failure(const Graph&)>& pred) {
    ++summary.checks;
    const NamedGraph* worst = nullptr;
    std::string why;
    std::size_t ran = 0;
    for (const auto& ng : corpus_) {
      if (!filter(ng.graph)) continue;
      ++ran;
      Failure f;
      try {
        f = pred(ng.graph);
      } catch (const Error& e) {
        f = std::string("threw: ") + e.what();
      }
      if (!f) continue;
      const auto key = [](const Graph& g) { return std::pair(g.num_vertices(), g.num_edges()); };
      if (!worst || key(ng.graph) < key(worst->graph)) {
        worst = &ng;
        why = *f;
      }
    }
    if (!worst) {
      out_ << "PASS " << name << " (" << ran << " instances)\n";
      return;
    }
    ++summary.failures;
    out_ << "FAIL " << name << " on " << worst->name << ": " << why << "\n";
    write_edge_list(out_, worst->graph, {"failing instance: " + worst->name});
  }

  VerifySummary summary;

 private:
  std::ostream& out_;
  const std::vector<NamedGraph>& corpus_;
};

bool any(const Graph&) { return true; }
bool has_edges(const Graph& g) { return g.num_edges() > 0; }
bool regular_proper(const Graph& g) {
  return g.num_edges() > 0 && is_regular(g) &&
         static_cast<double>(g.degree(0)) <= 0.99 * static_cast<double>(g.num_vertices());
}

std::string str(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

Failure fail_if(bool bad, const std::string& what) { return bad ? Failure(what) : std::nullopt; }

void core_suite(Runner& run) {
  run.check("degree sum equals 2m", any, [](const Graph& g) {
    std::size_t s = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) s += g.degree(v);
    return fail_if(s != 2 * g.num_edges(), "degree sum " + std::to_string(s));
  });
  run.check("triangles equal trace(A^3)/6", any, [](const Graph& g) {
    std::uint64_t tr = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) tr += walk_count(g, v, v, 3);
    return fail_if(tr != 6 * triangle_count(g), "trace " + std::to_string(tr));
  });
  run.check("codegrees over edges sum to 3t", any, [](const Graph& g) {
    std::uint64_t s = 0;
    for (const Edge& e : g.edges()) s += codegree(g, e.u, e.v);
    return fail_if(s != 3 * triangle_count(g), "sum " + std::to_string(s));
  });
  run.check("hom(C5) equals the naive 5-loop count", [](const Graph& g) { return g.num_vertices() <= 8; },
            [](const Graph& g) {
              const std::size_t n = g.num_vertices();
              std::uint64_t c = 0;
              for (Vertex a = 0; a < n; ++a)
                for (Vertex b : g.neighbors(a))
                  for (Vertex x : g.neighbors(b))
                    for (Vertex y : g.neighbors(x))
                      for (Vertex z : g.neighbors(y)) c += g.adjacent(z, a);
              return fail_if(c != hom_count_c5(g), "naive " + std::to_string(c));
            });
  run.check("degeneracy order has at most d later neighbours", any, [](const Graph& g) {
    const Degeneracy dg = degeneracy_order(g);
    std::vector<std::size_t> pos(g.num_vertices());
    for (std::size_t i = 0; i < dg.order.size(); ++i) pos[dg.order[i]] = i;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::size_t later = 0;
      for (Vertex w : g.neighbors(v)) later += pos[w] > pos[v];
      if (later > dg.degeneracy) return Failure("vertex " + std::to_string(v));
    }
    return Failure();
  });
  run.check("2-cliques equal m and 3-cliques equal t", any, [](const Graph& g) {
    return fail_if(clique_count(g, 2) != g.num_edges() || clique_count(g, 3) != triangle_count(g), "clique count");
  });
  run.check("exact oracle dominates local search and Edwards", any, [](const Graph& g) {
    const OracleResult ex = max_cut_exact(g);
    const OracleResult ls = local_search(g, 7, 8);
    if (ls.mc > ex.mc) return Failure("local search " + std::to_string(ls.mc) + " > " + std::to_string(ex.mc));
    if (ex.witness.surplus().value() < edwards_bound(g.num_edges()) - 1e-9) return Failure("below Edwards");
    auto side = ex.witness.sides();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      side[v] ^= 1;
      if (count_crossing(g, side) > ex.mc) return Failure("flip improves witness");
      side[v] ^= 1;
    }
    return Failure();
  });
}

VectorAssignment random_vectors(const Graph& g, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  VectorAssignment va(g.num_vertices(), dim, "gaussian");
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (std::size_t i = 0; i < dim; ++i) va.set(v, i, rng.normal());
  return va;
}

void rounding_suite(Runner& run) {
  run.check("expected cut invariant under rotation, scaling and negation", has_edges, [](const Graph& g) {
    const VectorAssignment va = random_vectors(g, 4, 11);
    const double base = analytic_expected_cut(g, va);
    VectorAssignment rot(g.num_vertices(), 4, "r"), sc(g.num_vertices(), 4, "s"), neg(g.num_vertices(), 4, "n");
    const double c = std::cos(0.7), s = std::sin(0.7);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const double scale = 0.5 + v;
      for (std::size_t i = 0; i < 4; ++i) {
        sc.set(v, i, scale * va.get(v, i));
        neg.set(v, i, -va.get(v, i));
        rot.set(v, i, va.get(v, i));
      }
      rot.set(v, 0, c * va.get(v, 0) - s * va.get(v, 1));
      rot.set(v, 1, s * va.get(v, 0) + c * va.get(v, 1));
    }
    for (const auto* w : {&rot, &sc, &neg}) {
      const double x = analytic_expected_cut(g, *w);
      if (std::abs(x - base) > 1e-10 * std::max(1.0, std::abs(base))) return Failure("changed to " + str(x));
    }
    return Failure();
  });
  run.check("augmentation keeps inner products and adds 1 to norms", has_edges, [](const Graph& g) {
    const VectorAssignment va = random_vectors(g, 3, 12);
    const VectorAssignment y = augment_with_identity(g, va);
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (std::abs(y.norm2(u) - va.norm2(u) - 1.0) > 1e-12) return Failure("norm at " + std::to_string(u));
      for (Vertex v = u + 1; v < g.num_vertices(); ++v)
        if (std::abs(y.dot(u, v) - va.dot(u, v)) > 1e-12) return Failure("product changed");
    }
    return Failure();
  });
  run.check("Monte Carlo mean within 4 standard errors of the expectation", has_edges, [](const Graph& g) {
    const VectorAssignment va = random_vectors(g, 3, 13);
    for (std::uint64_t attempt = 0; attempt < 2; ++attempt) {
      const RoundingOutcome r = hyperplane_round(g, va, 1000 + attempt, 10'000);
      const double se = r.stddev_crossing / std::sqrt(10'000.0);
      if (std::abs(r.mean_crossing - r.analytic_expectation) <= 4.0 * se + 1e-12) return Failure();
    }
    return Failure("two consecutive deviations above 4 standard errors");
  });
  run.check("best of 1000 trials reaches the expectation", [](const Graph& g) { return has_edges(g) && g.num_vertices() <= 12; },
            [](const Graph& g) {
              const RoundingOutcome r = hyperplane_round(g, random_vectors(g, 3, 14), 15, 1000);
              return fail_if(static_cast<double>(r.best_crossing) < r.analytic_expectation - 1e-9,
                             "best " + std::to_string(r.best_crossing));
            });
}

void vectors_suite(Runner& run) {
  run.check("regular inner-product closed form matches dot products", regular_proper, [](const Graph& g) {
    for (double gamma : {1.0, 0.1, 1e-3}) {
      const auto p = RegularVectorParams::for_graph(g, gamma);
      const VectorAssignment va = regular_vectors(g, p);
      for (const Edge& e : g.edges()) {
        const double direct = va.dot(e.u, e.v), closed = regular_edge_inner_product(g, p, e.u, e.v);
        if (std::abs(direct - closed) > 1e-12 * std::max(1.0, std::abs(direct))) return Failure(str(direct) + " vs " + str(closed));
      }
    }
    return Failure();
  });
  run.check("strongly regular edges stay below the regime bound", regular_proper, [](const Graph& g) {
    SrgParams sp;
    try {
      sp = srg_params(g);
    } catch (const PreconditionError&) {
      return Failure();
    }
    const GammaChoice gc = srg_gamma(sp);
    const auto p = RegularVectorParams::for_graph(g, gc.gamma);
    const VectorAssignment va = regular_vectors(g, p);
    for (const Edge& e : g.edges()) {
      const double x = va.dot(e.u, e.v);
      if (!(x < 0.0) || x > gc.edge_bound + 1e-15) return Failure("edge product " + str(x));
    }
    return Failure();
  });
  run.check("signed vectors keep norms and match regular vectors without high codegrees",
            [](const Graph& g) { return regular_proper(g) && 2 * g.degree(0) <= g.num_vertices(); },
            [](const Graph& g) {
              const auto p = RegularVectorParams::for_graph(g, 0.1);
              const VectorAssignment x = regular_vectors(g, p), y = signed_vectors(g, p, 5);
              bool high = false;
              for (const Edge& e : g.edges()) high = high || high_codegree(g, e.u, e.v);
              for (Vertex v = 0; v < g.num_vertices(); ++v) {
                if (std::abs(x.norm2(v) - y.norm2(v)) > 1e-12) return Failure("norm differs");
                if (!high)
                  for (Vertex u = 0; u < g.num_vertices(); ++u)
                    if (x.get(v, u) != y.get(v, u)) return Failure("coordinate differs");
              }
              return Failure();
            });
  run.check("C5 bucket decomposition, norms and intersection bound", regular_proper, [](const Graph& g) {
    const double d = static_cast<double>(g.degree(0));
    for (double s : {1.0, 2.0, 4.0}) {
      const BucketSets sets = c5_bucket_sets(g, s);
      const VectorAssignment va = c5_bucket_vectors(g, sets);
      std::uint64_t ss = 0;
      for (const Edge& e : g.edges()) {
        const C5InnerProduct ip = c5_inner_product(g, sets, e.u, e.v);
        if (std::abs(ip.value - va.dot(e.u, e.v)) > 1e-12) return Failure("decomposition off at s=" + str(s));
        ss += ip.ss;
      }
      if (static_cast<double>(ss) * s * s > static_cast<double>(hom_count_c5(g))) return Failure("intersection bound at s=" + str(s));
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (va.norm2(v) > 2.0 + 1e-12) return Failure("norm above 2");
        if (static_cast<double>(sets.S[v].size()) * s > d * d) return Failure("|S(v)| s above d^2");
      }
    }
    return Failure();
  });
}

void structure_suite(Runner& run) {
  run.check("combined cut surplus dominates the part surpluses", has_edges, [](const Graph& g) {
    Rng rng(21);
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<Vertex>> parts(3);
    for (Vertex v = 0; v < n; ++v) parts[rng.below(4) % 3].push_back(v);
    std::vector<Cut> cuts;
    std::int64_t sum = 0;
    for (const auto& p : parts) {
      const Graph sub = induced_subgraph(g, p);
      cuts.emplace_back(sub, flip_to_local_optimum(sub, std::vector<std::uint8_t>(p.size(), 0)));
      sum += cuts.back().surplus().twice();
    }
    const Cut c = combine_cuts(g, parts, cuts);
    return fail_if(c.surplus().twice() < sum, "surplus " + c.surplus().str());
  });
  run.check("good partition clauses", any, [](const Graph& g) {
    const double dmax = g.num_vertices() ? static_cast<double>(degree_stats(g).max) : 0.0;
    for (double d : {0.0, 1.0, 2.5, 3.0, dmax, dmax + 1.0}) {
      const GoodPartition gp = good_partition(g, d);
      std::vector<int> pos(g.num_vertices(), -1);
      for (std::size_t i = 0; i < gp.order.size(); ++i) pos[gp.order[i]] = static_cast<int>(i);
      for (Vertex v : gp.order) {
        std::size_t later = 0;
        for (Vertex w : g.neighbors(v)) later += pos[w] < 0 || pos[w] > pos[v];
        if (static_cast<double>(later) >= d) return Failure("peeled vertex too dense at d=" + str(d));
      }
      for (Vertex v : gp.high) {
        std::size_t inside = 0;
        for (Vertex w : g.neighbors(v)) inside += pos[w] < 0;
        if (static_cast<double>(inside) < d) return Failure("T below minimum degree at d=" + str(d));
      }
    }
    return Failure();
  });
  run.check("dyadic buckets sum to all 2-paths", [](const Graph& g) { return g.num_edges() >= 2 && degree_stats(g).max >= 2; },
            [](const Graph& g) {
              const DyadicBucket b = dyadic_codegree_bucket(g);
              std::uint64_t paths = 0, sum = 0;
              for (Vertex v = 0; v < g.num_vertices(); ++v) paths += g.degree(v) * (g.degree(v) - (g.degree(v) ? 1 : 0)) / 2;
              for (auto c : b.buckets) sum += c;
              return fail_if(sum != paths || b.total != paths, "bucket total " + std::to_string(sum));
            });
  run.check("regularization postconditions", has_edges, [](const Graph& g) {
    for (auto [a, b, e] : {std::tuple{0.0, 2.0, 0.5}, std::tuple{-1.0, 3.0, 0.25}, std::tuple{0.5, 1.0, 0.1}}) {
      const auto p = RegularizationParams::make(a, b, e);
      const RegularizationResult r = regularize(g, p, 3);
      if (r.cut) continue;
      const Graph& h = r.subgraph;
      if (h.num_vertices() && static_cast<double>(degree_stats(h).max) > p.C * average_degree(h) * (1 + 1e-12))
        return Failure("degree ratio above C");
      if (r.weight_output < (1.0 - e) * r.weight_input * (1 - 1e-12)) return Failure("weight dropped");
    }
    return Failure();
  });
}

void sampling_suite(Runner& run) {
  run.check("triangle sampling chain and disjoint parts", [](const Graph& g) { return has_edges(g) && average_degree(g) >= 1.0; },
            [](const Graph& g) {
              const SamplingCutResult r = triangle_sampling_cut(g, 0.1, std::nullopt, 31, 200);
              for (const auto& t : r.per_trial)
                if (t.surplus.twice() < t.x - t.y - t.z) return Failure("chain broken");
              std::vector<int> seen(g.num_vertices(), 0);
              for (const auto* fam : {&r.a_parts, &r.b_parts})
                for (const auto& part : *fam)
                  for (Vertex v : part)
                    if (seen[v]++) return Failure("parts overlap");
              return Failure();
            });
  run.check("bucket sampling chain", [](const Graph& g) { return g.num_edges() >= 2 && degree_stats(g).max >= 2; },
            [](const Graph& g) {
              const DyadicBucket b = dyadic_codegree_bucket(g);
              const SamplingCutResult r = bucket_neighborhood_cut(g, c5_bucket_sets(g, static_cast<double>(b.s)), 32, 200);
              for (const auto& t : r.per_trial)
                if (t.surplus.twice() < t.x - t.y - t.z) return Failure("chain broken");
              return Failure();
            });
  run.check("sparse-set cut deduplication and surplus", [](const Graph& g) { return has_edges(g) && is_regular(g); },
            [](const Graph& g) {
              const std::vector<Vertex> s = {0, static_cast<Vertex>(g.num_vertices() / 2)};
              const SparseSetResult r = sparse_set_cut(g, s, 33, 32);
              return fail_if(r.cut.surplus().twice() < 0 || r.cut.surplus().twice() < r.best_q, "surplus " + r.cut.surplus().str());
            });
}

void spectral_suite(Runner& run) {
  run.check("exact cut never exceeds the eigenvalue bound", has_edges, [](const Graph& g) {
    const double ub = eigenvalue_upper_bound(g);
    const std::size_t mc = max_cut_exact(g).mc;
    return fail_if(static_cast<double>(mc) > ub + 1e-6, "mc " + std::to_string(mc) + " > " + str(ub));
  });
  run.check("lambda_min passes residual and Rayleigh checks", has_edges, [](const Graph& g) {
    const SpectralReport r = lambda_min(g);
    if (r.residual > 1e-8 * static_cast<double>(g.num_vertices())) return Failure("residual " + str(r.residual));
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
      std::vector<double> x(g.num_vertices());
      for (auto& xi : x) xi = rng.normal();
      double num = 0.0, den = 0.0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        den += x[v] * x[v];
        for (Vertex w : g.neighbors(v)) num += x[v] * x[w];
      }
      if (r.lambda_min > num / den + 1e-9) return Failure("Rayleigh quotient below lambda_min");
    }
    return Failure();
  });
  run.check("strongly regular formula matches the numeric eigenvalue", regular_proper, [](const Graph& g) {
    SrgParams sp;
    try {
      sp = srg_params(g);
    } catch (const PreconditionError&) {
      return Failure();
    }
    const double formula = srg_lambda_min(sp).lambda_min, numeric = lambda_min(g).lambda_min;
    return fail_if(std::abs(formula - numeric) > 1e-8, str(formula) + " vs " + str(numeric));
  });
}

}  // namespace

VerifySummary run_verify(std::string_view suite, std::ostream& out) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown verify suite '" + std::string(suite) + "'");
  const std::vector<NamedGraph> corpus = bundled_corpus();
  Runner run(out, corpus);
  const bool all = suite == "all";
  if (all || suite == "core") core_suite(run);
  if (all || suite == "rounding") rounding_suite(run);
  if (all || suite == "vectors") vectors_suite(run);
  if (all || suite == "structure") structure_suite(run);
  if (all || suite == "sampling") sampling_suite(run);
  if (all || suite == "spectral") spectral_suite(run);
  out << (run.summary.failures ? "FAILED " : "OK ") << run.summary.checks - run.summary.failures << "/"
      << run.summary.checks << " checks passed\n";
  return run.summary;
}

}  // namespace surplus
