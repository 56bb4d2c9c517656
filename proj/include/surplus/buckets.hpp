#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "surplus/graph.hpp"

namespace surplus {

enum class BucketKind { c5_codegree, odd_cycle };
std::string_view to_string(BucketKind k);

// Per-vertex threshold sets feeding the bucket vectors and the
// neighbourhood sampling.  S and T hold sorted vertex lists; T is empty for
// the C5 codegree window.
struct BucketSets {
  BucketKind kind = BucketKind::c5_codegree;
  std::vector<std::vector<Vertex>> S;
  std::vector<std::vector<Vertex>> T;
  double s = 1.0;        // s, or s_{0,q}
  double s_prime = 1.0;  // s_{0,q-1}
  unsigned q = 2;
  double nu = 0.0;       // density of the selected window
  double d = 0.0;        // average degree of the host graph
  std::size_t max_degree = 0;

  std::size_t size() const { return S.size(); }
  bool all_empty() const;
  // w -> {u : w in S(u)}.
  std::vector<std::vector<Vertex>> s_preimages() const;
};

// |a & b| for ascending vertex lists.
std::size_t sorted_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace surplus
