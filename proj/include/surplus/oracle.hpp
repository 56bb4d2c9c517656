#pragma once

#include <cstdint>
#include <string_view>

#include "surplus/graph.hpp"

namespace surplus {

enum class OracleMethod { exhaustive, branch_bound, local_search_lower_bound };
std::string_view to_string(OracleMethod m);

struct OracleResult {
  std::size_t mc = 0;
  Cut witness;
  OracleMethod method = OracleMethod::exhaustive;
  bool exact = true;
};

inline constexpr std::size_t kOracleCap = 30;
inline constexpr std::size_t kExhaustiveLimit = 24;

// Exact maximum cut for n <= 30: Gray-code enumeration up to 24 vertices,
// branch and bound above.  Vertex 0 is fixed to side 0 and the witness is
// the lexicographically smallest optimal side vector.  The result does not
// depend on the thread count.
OracleResult max_cut_exact(const Graph& g);
OracleResult max_cut_branch_bound(const Graph& g);

// Best of `restarts` random starts, each driven to a single-flip local
// optimum.  Restart i uses derive_seed(seed, i).
OracleResult local_search(const Graph& g, std::uint64_t seed, std::size_t restarts);

// First-improvement single-vertex flips, scanning vertices in index order,
// until no flip increases the crossing count.
std::vector<std::uint8_t> flip_to_local_optimum(const Graph& g, std::vector<std::uint8_t> side);

}  // namespace surplus
