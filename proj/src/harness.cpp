#include "surplus/harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "surplus/edge_list.hpp"
#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/oracle.hpp"
#include "surplus/parallel.hpp"
#include "surplus/rng.hpp"
#include "surplus/rounding.hpp"
#include "surplus/sampling.hpp"
#include "surplus/spectral.hpp"
#include "surplus/structure.hpp"
#include "surplus/vectors.hpp"

namespace surplus {

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {
      "hyperplane-regular", "hyperplane-srg", "hyperplane-signed", "c5-bucket",    "odd-cycle-st",
      "triangle-sampling",  "bucket-sampling", "codegree-trim",    "kr-recursive", "composite-kr",
      "local-search",       "oracle"};
  return names;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

void round_vectors(CutReport& rep, const Graph& g, const VectorAssignment& va, std::uint64_t seed, std::size_t trials) {
  const VectorAssignment y = augment_with_identity(g, va);
  y.validate();
  RoundingOutcome out = hyperplane_round(g, y, seed, trials);
  rep.cut = std::move(out.cut);
  rep.guarantee = out.analytic_expectation - static_cast<double>(g.num_edges()) / 2.0;
  rep.stats.emplace_back("analytic_expected_cut", format_double(out.analytic_expectation));
  rep.stats.emplace_back("mean_crossing", format_double(out.mean_crossing));
  rep.stats.emplace_back("best_trial", std::to_string(out.best_trial));
}

void sampling_stats(CutReport& rep, const SamplingCutResult& res) {
  const SamplingTrial t = res.xyz();
  rep.cut = res.cut;
  rep.guarantee = 0.5 * static_cast<double>(t.x - t.y - t.z);
  rep.stats.emplace_back("k", std::to_string(res.plan.k));
  rep.stats.emplace_back("p", format_double(res.plan.p));
  if (res.plan.clamped) rep.stats.emplace_back("p_clamped", "true");
  rep.stats.emplace_back("X", std::to_string(t.x));
  rep.stats.emplace_back("Y", std::to_string(t.y));
  rep.stats.emplace_back("Z", std::to_string(t.z));
  rep.stats.emplace_back("best_trial", std::to_string(res.best_trial));
}

}  // namespace

CutReport run_algorithm(const Graph& g, std::string_view algorithm, std::uint64_t root_seed,
                        const AlgorithmOptions& opts) {
  if (opts.trials == 0) throw UsageError("trials must be at least 1");
  CutReport rep;
  rep.algorithm = std::string(algorithm);
  const std::uint64_t seed = derive_seed(root_seed, algorithm);
  if (algorithm == "oracle") {
    require(g.num_vertices() <= kOracleCap, "exact oracle is limited to 30 vertices");
    OracleResult r = max_cut_exact(g);
    rep.cut = r.witness;
    rep.guarantee = rep.cut.surplus().value();
    rep.stats.emplace_back("method", std::string(to_string(r.method)));
    rep.stats.emplace_back("mc", std::to_string(r.mc));
  } else if (algorithm == "local-search") {
    OracleResult r = local_search(g, seed, opts.trials);
    rep.cut = r.witness;
    rep.guarantee = 0.0;
    rep.stats.emplace_back("restarts", std::to_string(opts.trials));
  } else if (algorithm == "hyperplane-regular") {
    const auto p = RegularVectorParams::for_graph(g, opts.gamma);
    rep.stats.emplace_back("gamma", format_double(p.gamma));
    round_vectors(rep, g, regular_vectors(g, p), seed, opts.trials);
  } else if (algorithm == "hyperplane-srg") {
    const SrgParams sp = srg_params(g);
    const GammaChoice gc = srg_gamma(sp, opts.small_gamma);
    const auto p = RegularVectorParams::for_graph(g, gc.gamma);
    rep.stats.emplace_back("regime", std::string(to_string(gc.regime)));
    rep.stats.emplace_back("gamma", format_double(gc.gamma));
    rep.stats.emplace_back("edge_bound", format_double(gc.edge_bound));
    round_vectors(rep, g, regular_vectors(g, p), seed, opts.trials);
  } else if (algorithm == "hyperplane-signed") {
    const auto p = RegularVectorParams::for_graph(g, opts.gamma);
    rep.stats.emplace_back("gamma", format_double(p.gamma));
    rep.stats.emplace_back("lemma_rhs", format_double(sign_lemma_rhs(g, p)));
    round_vectors(rep, g, signed_vectors(g, p, derive_seed(seed, "signs")), seed, opts.trials);
  } else if (algorithm == "c5-bucket") {
    require(is_regular(g), "graph is not regular");
    const DyadicBucket b = dyadic_codegree_bucket(g);
    rep.stats.emplace_back("s", std::to_string(b.s));
    rep.stats.emplace_back("bucket_paths", std::to_string(b.count));
    round_vectors(rep, g, c5_bucket_vectors(g, static_cast<double>(b.s)), seed, opts.trials);
  } else if (algorithm == "odd-cycle-st") {
    const unsigned r = opts.r.value_or(5);
    const GoodPathProfile prof = good_path_profile(g, r, derive_seed(seed, "profile"));
    const BucketSets sets = st_sets(g, prof, prof.q);
    rep.stats.emplace_back("r", std::to_string(r));
    rep.stats.emplace_back("nu", format_double(prof.nu));
    rep.stats.emplace_back("A", std::to_string(prof.a_count()));
    round_vectors(rep, g, odd_cycle_st_vectors(g, sets, prof.q), seed, opts.trials);
  } else if (algorithm == "triangle-sampling") {
    sampling_stats(rep, triangle_sampling_cut(g, opts.epsilon, std::nullopt, seed, opts.trials));
  } else if (algorithm == "bucket-sampling") {
    const DyadicBucket b = dyadic_codegree_bucket(g);
    rep.stats.emplace_back("s", std::to_string(b.s));
    sampling_stats(rep, bucket_neighborhood_cut(g, c5_bucket_sets(g, static_cast<double>(b.s)), seed, opts.trials));
  } else if (algorithm == "codegree-trim") {
    TrimmingResult t = codegree_trimming_cut(g, seed);
    rep.cut = std::move(t.cut);
    rep.stats.emplace_back("fallback", t.fallback ? "true" : "false");
    if (t.fallback) rep.stats.emplace_back("reason", t.reason);
    rep.stats.emplace_back("level", std::to_string(t.level));
    rep.stats.emplace_back("q_mass", format_double(t.q_mass));
    rep.stats.emplace_back("sparse_target", format_double(t.sparse_target));
    if (!t.fallback) rep.guarantee = t.sparse_target;
  } else if (algorithm == "kr-recursive" || algorithm == "composite-kr") {
    const bool composite = algorithm == "composite-kr";
    const unsigned r = opts.r.value_or(composite ? 3 : 4);
    RecursiveCutResult res = composite ? composite_kr_cut(g, r, seed, opts.trials)
                                       : kr_recursive_cut(g, r, opts.epsilon, seed, 4, opts.trials);
    rep.cut = std::move(res.cut);
    rep.stats.emplace_back("r", std::to_string(r));
    rep.stats.emplace_back("depth", std::to_string(res.depth));
    for (std::size_t i = 0; i < res.log.size(); ++i) rep.stats.emplace_back("log" + std::to_string(i), res.log[i]);
  } else {
    throw UsageError("unknown algorithm '" + std::string(algorithm) + "'");
  }
  check_invariant(rep.cut.consistent_with(g), "reported cut is inconsistent with the graph");
  return rep;
}

ExperimentSpec ExperimentSpec::parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("experiment spec: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("experiment spec must be a JSON object");
  ExperimentSpec spec;
  try {
    for (const auto& item : j.value("graphs", nlohmann::json::array())) {
      GraphSource src;
      if (item.is_string()) {
        src.generator = item.get<std::string>();
        src.id = *src.generator;
      } else if (item.is_object() && item.contains("file")) {
        src.file = item.at("file").get<std::string>();
        src.id = item.value("id", *src.file);
      } else if (item.is_object() && item.contains("generator")) {
        src.generator = item.at("generator").get<std::string>();
        src.id = item.value("id", *src.generator);
      } else {
        throw UsageError("graph entries must be generator strings or objects with \"file\" or \"generator\"");
      }
      spec.graphs.push_back(std::move(src));
    }
    for (const auto& a : j.value("algorithms", nlohmann::json::array())) {
      std::string name = a.get<std::string>();
      const auto& known = algorithm_names();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw UsageError("unknown algorithm '" + name + "'");
      spec.algorithms.push_back(std::move(name));
    }
    spec.options.trials = j.value("trials", spec.options.trials);
    spec.options.gamma = j.value("gamma", spec.options.gamma);
    spec.options.epsilon = j.value("epsilon", spec.options.epsilon);
    if (j.contains("r")) spec.options.r = j.at("r").get<unsigned>();
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.timing = j.value("timing", false);
    if (j.contains("output")) spec.output = j.at("output").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("experiment spec: ") + e.what());
  }
  return spec;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {
      "graph",    "n",     "m",       "d",           "triangles",     "s",         "algorithm", "status",
      "crossing", "surplus", "edwards", "shearer_raw", "eigenvalue_ub", "guarantee"};
  return cols;
}

void run_sweep(const ExperimentSpec& spec, std::ostream& csv) {
  std::vector<Graph> graphs;
  for (const auto& src : spec.graphs)
    graphs.push_back(src.file ? read_edge_list_file(*src.file).graph : generate(GeneratorSpec::parse(*src.generator)));

  struct GraphInfo {
    std::vector<std::string> prefix;
    std::string edwards, shearer, eig;
  };
  std::vector<GraphInfo> info(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    const Graph& g = graphs[i];
    const BoundReport b = bound_report(g);
    info[i].prefix = {spec.graphs[i].id,
                      std::to_string(g.num_vertices()),
                      std::to_string(g.num_edges()),
                      g.num_vertices() ? format_double(average_degree(g)) : "0",
                      std::to_string(triangle_count(g)),
                      g.num_vertices() ? format_double(triangle_surplus(g)) : "0"};
    info[i].edwards = format_double(b.edwards);
    info[i].shearer = format_double(b.shearer_raw);
    if (g.num_edges() > 0) {
      try {
        info[i].eig = format_double(eigenvalue_upper_bound(g));
      } catch (const Error&) {
      }
    }
  });

  const std::size_t rows = graphs.size() * spec.algorithms.size();
  std::vector<std::vector<std::string>> out(rows);
  std::vector<double> wall(rows, 0.0);
  parallel_for(rows, [&](std::size_t row) {
    const std::size_t gi = row / spec.algorithms.size();
    const std::string& alg = spec.algorithms[row % spec.algorithms.size()];
    std::vector<std::string> fields = info[gi].prefix;
    fields.push_back(alg);
    const auto start = std::chrono::steady_clock::now();
    try {
      const CutReport rep = run_algorithm(graphs[gi], alg, spec.seed, spec.options);
      fields.push_back("ok");
      fields.push_back(std::to_string(rep.cut.crossing()));
      fields.push_back(rep.cut.surplus().str());
      fields.push_back(info[gi].edwards);
      fields.push_back(info[gi].shearer);
      fields.push_back(info[gi].eig);
      fields.push_back(rep.guarantee ? format_double(*rep.guarantee) : "");
    } catch (const PreconditionError& e) {
      fields.push_back(std::string("skip: ") + e.what());
      fields.insert(fields.end(), {"", "", info[gi].edwards, info[gi].shearer, info[gi].eig, ""});
    }
    wall[row] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out[row] = std::move(fields);
  });

  auto write_row = [&csv](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) csv << (i ? "," : "") << csv_escape(fields[i]);
    csv << "\r\n";
  };
  std::vector<std::string> header = sweep_columns();
  if (spec.timing) header.push_back("wall_ms");
  write_row(header);
  for (std::size_t row = 0; row < rows; ++row) {
    if (spec.timing) out[row].push_back(format_double(std::round(wall[row] * 1000.0) / 1000.0));
    write_row(out[row]);
  }
}

}  // namespace surplus
