#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "surplus/graph.hpp"

namespace surplus {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Small named graphs plus seeded G(n, p) instances, all with n <= 20.
std::vector<NamedGraph> bundled_corpus();

const std::vector<std::string>& verify_suites();

struct VerifySummary {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

// Runs one suite ("core", "rounding", "vectors", "structure", "sampling",
// "spectral" or "all"), printing one PASS/FAIL line per check and the edge
// list of the first failing instance of each failed check.  UsageError for
// an unknown suite.
VerifySummary run_verify(std::string_view suite, std::ostream& out);

}  // namespace surplus
