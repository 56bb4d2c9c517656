#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "surplus/edge_list.hpp"
#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/harness.hpp"
#include "surplus/oracle.hpp"
#include "surplus/spectral.hpp"
#include "surplus/structure.hpp"
#include "surplus/verify.hpp"

using namespace surplus;

namespace {

std::string join(const std::vector<std::string>& words, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? sep : "") + words[i];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cmd_generate(const std::vector<std::string>& words, const std::string& output) {
  const GeneratorSpec spec = GeneratorSpec::parse(join(words));
  const Graph g = generate(spec);
  const std::vector<std::string> header = {"generator: " + spec.to_string()};
  if (output.empty()) {
    write_edge_list(std::cout, g, header);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + output);
    write_edge_list(out, g, header);
  }
  return 0;
}

int cmd_cut(const std::string& file, const std::string& algorithm, std::uint64_t seed, const AlgorithmOptions& opts) {
  const Graph g = read_edge_list_file(file).graph;
  const CutReport rep = run_algorithm(g, algorithm, seed, opts);
  std::cout << "algorithm: " << rep.algorithm << "\n"
            << "n: " << g.num_vertices() << "\n"
            << "m: " << g.num_edges() << "\n"
            << "crossing: " << rep.cut.crossing() << "\n"
            << "surplus: " << rep.cut.surplus().str() << "\n";
  if (rep.guarantee) std::cout << "guarantee: " << format_double(*rep.guarantee) << "\n";
  for (const auto& [k, v] : rep.stats) std::cout << k << ": " << v << "\n";
  std::cout << "sides: " << rep.cut.bitstring() << "\n";
  return 0;
}

int cmd_oracle(const std::string& file) {
  const Graph g = read_edge_list_file(file).graph;
  const OracleResult r = max_cut_exact(g);
  std::cout << "mc: " << r.mc << "\n"
            << "surplus: " << r.witness.surplus().str() << "\n"
            << "method: " << to_string(r.method) << "\n"
            << "witness: " << r.witness.bitstring() << "\n";
  return 0;
}

int cmd_profile(const std::string& file, std::optional<unsigned> r, std::uint64_t seed) {
  const Graph g = read_edge_list_file(file).graph;
  nlohmann::ordered_json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  if (g.num_vertices()) {
    const DegreeStats ds = degree_stats(g);
    j["degree"] = {{"min", ds.min}, {"max", ds.max}, {"average", ds.average}};
    j["triangles"] = triangle_count(g);
    j["triangle_surplus"] = triangle_surplus(g);
  }
  const BoundReport b = bound_report_with_spectrum(g);
  j["edwards"] = b.edwards;
  j["shearer_raw"] = b.shearer_raw;
  if (b.lambda_min) {
    j["lambda_min"] = *b.lambda_min;
    j["eigenvalue_upper_bound"] = static_cast<double>(g.num_edges()) / 2.0 + *b.eigenvalue_surplus_bound;
  }
  try {
    const DyadicBucket db = dyadic_codegree_bucket(g);
    j["codegree_bucket"] = {{"s", db.s}, {"paths", db.count}, {"buckets", db.buckets}};
  } catch (const PreconditionError&) {
  }
  if (r) {
    const GoodPathProfile prof = good_path_profile(g, *r, seed);
    nlohmann::ordered_json p;
    p["ell"] = prof.ell;
    p["q"] = prof.q;
    p["epsilon"] = prof.epsilon;
    p["s_matrix"] = prof.s;
    p["nu"] = prof.nu;
    p["sampled"] = prof.sampled;
    p["signature_paths"] = prof.signature_count;
    p["total_paths"] = prof.total_paths;
    std::vector<std::size_t> sizes(prof.q + 1, 0);
    for (auto l : prof.layer) ++sizes[l];
    p["layer_sizes"] = sizes;
    p["layer_attempts"] = prof.layer_attempts;
    p["A"] = prof.a_count();
    p["B"] = prof.b_count();
    p["expected_A"] = prof.expected_a;
    j["good_paths"] = p;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const std::string& file, const std::string& output, bool timing) {
  ExperimentSpec spec = ExperimentSpec::parse_json(read_file(file));
  spec.timing = spec.timing || timing;
  const std::string target = output.empty() ? spec.output.value_or("") : output;
  if (target.empty()) {
    run_sweep(spec, std::cout);
    return 0;
  }
  std::ostringstream csv;
  run_sweep(spec, csv);
  std::ofstream out(target, std::ios::binary);
  if (!out) throw UsageError("cannot write " + target);
  out << csv.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surplus-lab: MaxCut surplus constructions, oracles and bounds"};
  app.require_subcommand(1);

  std::vector<std::string> gen_words;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
  gen->add_option("spec", gen_words, "Family and parameters, e.g. 'paley 13' or 'gnp 100 0.1 seed=7'")->required();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string cut_file, cut_alg;
  std::uint64_t seed = 0;
  AlgorithmOptions opts;
  unsigned r_value = 0;
  auto* cut = app.add_subcommand("cut", "Run a cut algorithm on an edge-list file");
  cut->add_option("graph", cut_file, "Edge-list file")->required();
  cut->add_option("algorithm", cut_alg, "One of: " + join(algorithm_names(), ", "))->required();
  cut->add_option("--seed", seed, "Root seed");
  cut->add_option("--trials", opts.trials, "Trials or restarts");
  cut->add_option("--gamma", opts.gamma, "gamma for hyperplane-regular and hyperplane-signed");
  cut->add_option("--epsilon", opts.epsilon, "epsilon for the sampling routines");
  auto* cut_r = cut->add_option("--r", r_value, "Forbidden clique or odd cycle length");

  std::string oracle_file;
  auto* oracle = app.add_subcommand("oracle", "Exact maximum cut (n <= 30)");
  oracle->add_option("graph", oracle_file, "Edge-list file")->required();

  std::string profile_file;
  unsigned profile_r = 0;
  auto* profile = app.add_subcommand("profile", "JSON summary of counts, bounds and codegree buckets");
  profile->add_option("graph", profile_file, "Edge-list file")->required();
  auto* profile_r_opt = profile->add_option("--r", profile_r, "Odd cycle length for the good-path profile");
  profile->add_option("--seed", seed, "Root seed");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite on the bundled corpus");
  verify->add_option("suite", suite, "One of: " + join(verify_suites(), ", "))->required();

  std::string sweep_file, sweep_out;
  bool timing = false;
  auto* sweep = app.add_subcommand(
      "sweep", "Run a JSON experiment spec and write CSV.\nColumns: " + join(sweep_columns(), ",") +
                   "[,wall_ms]\nSkipped algorithms carry status 'skip: <reason>'.");
  sweep->add_option("spec", sweep_file, "Experiment spec (JSON)")->required();
  sweep->add_option("-o,--output", sweep_out, "Output CSV (default: spec output or stdout)");
  sweep->add_flag("--timing", timing, "Append a wall_ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_generate(gen_words, gen_out);
    if (*cut) {
      if (*cut_r) opts.r = r_value;
      return cmd_cut(cut_file, cut_alg, seed, opts);
    }
    if (*oracle) return cmd_oracle(oracle_file);
    if (*profile) return cmd_profile(profile_file, *profile_r_opt ? std::optional<unsigned>(profile_r) : std::nullopt, seed);
    if (*verify) return run_verify(suite, std::cout).failures ? 4 : 0;
    if (*sweep) return cmd_sweep(sweep_file, sweep_out, timing);
  } catch (const PreconditionError& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 4;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
