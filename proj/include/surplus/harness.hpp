#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surplus/graph.hpp"

namespace surplus {

// Algorithm names accepted by run_algorithm, in documentation order.
const std::vector<std::string>& algorithm_names();

struct AlgorithmOptions {
  std::size_t trials = 64;
  double gamma = 0.1;                 // hyperplane-regular, hyperplane-signed
  double small_gamma = 1e-6;          // hyperplane-srg middle band
  double epsilon = 0.1;               // sampling routines
  std::optional<unsigned> r;          // kr-recursive 4, composite-kr 3, odd-cycle-st 5
};

struct CutReport {
  std::string algorithm;
  Cut cut;
  // Algorithm-specific guarantee statistics in a fixed order.
  std::vector<std::pair<std::string, std::string>> stats;
  // Value the algorithm certifies for its surplus, if any.
  std::optional<double> guarantee;
};

// Every component seed is derive_seed(seed, algorithm name).  Throws
// UsageError for an unknown name and PreconditionError when the algorithm
// does not apply to g.
CutReport run_algorithm(const Graph& g, std::string_view algorithm, std::uint64_t seed,
                        const AlgorithmOptions& opts = {});

// Sweep specification (JSON):
//   {"graphs": ["paley 13", {"file": "g.el", "id": "g"}],
//    "algorithms": ["local-search", "oracle"],
//    "trials": 64, "seed": 1, "timing": false, "output": "out.csv"}
struct GraphSource {
  std::string id;
  std::optional<std::string> generator;
  std::optional<std::string> file;
};

struct ExperimentSpec {
  std::vector<GraphSource> graphs;
  std::vector<std::string> algorithms;
  AlgorithmOptions options;
  std::uint64_t seed = 0;
  bool timing = false;
  std::optional<std::string> output;

  static ExperimentSpec parse_json(std::string_view text);
};

// Fixed column order of the sweep CSV; wall_ms is appended when timing is on.
const std::vector<std::string>& sweep_columns();

// Rows in spec order (graph-major).  Inapplicable algorithms give rows with
// status "skip: <reason>" and empty result columns.
void run_sweep(const ExperimentSpec& spec, std::ostream& csv);

// Locale-independent shortest round-trip formatting.
std::string format_double(double x);
std::string csv_escape(std::string_view field);

}  // namespace surplus
