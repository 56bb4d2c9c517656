#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "surplus/graph.hpp"

namespace surplus {

Graph gnp(std::size_t n, double p, std::uint64_t seed);
// gnp followed by one pass over the edges in lexicographic order deleting
// every edge that still lies in a triangle.  Equivalent to repeatedly
// deleting the smallest edge of the smallest remaining triangle.
Graph triangle_free_gnp(std::size_t n, double p, std::uint64_t seed);
// q prime, q = 1 mod 4, q <= 10^4.
Graph paley(std::uint32_t q);
// Points of PG(2,q), q prime <= 101, as triples whose first non-zero
// coordinate is 1, indexed in lexicographic order; x ~ y iff x.y = 0 mod q.
Graph polarity(std::uint32_t q);
// Each vertex of h becomes an independent s-set (vertex v -> v*s .. v*s+s-1).
Graph blowup(const Graph& h, std::size_t s);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
Graph petersen();
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph complete_multipartite(std::size_t parts, std::size_t size);
Graph bipartite_random(std::size_t a, std::size_t b, double p, std::uint64_t seed);
// Uniform-ish d-regular graph by the Steger-Wormald pairing with restarts.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

bool is_prime(std::uint64_t q);

enum class Family {
  gnp,
  triangle_free,
  paley,
  polarity,
  complete,
  cycle,
  path,
  star,
  petersen,
  complete_bipartite,
  multipartite,
  bipartite_random,
  random_regular,
  blowup,
};

// Textual form: "<family> <params...> [seed=<u64>]", e.g. "paley 13",
// "gnp 100 0.1 seed=7", "blowup 4 cycle 7".
struct GeneratorSpec {
  Family family = Family::complete;
  std::vector<double> params;
  std::shared_ptr<const GeneratorSpec> base;  // blowup only
  std::uint64_t seed = 0;

  static GeneratorSpec parse(std::string_view text);
  std::string to_string() const;
  bool randomized() const;
};

Graph generate(const GeneratorSpec& spec);

}  // namespace surplus
