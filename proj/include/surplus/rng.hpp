#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace surplus {

// One splitmix64 step.  Used for seeding and for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seeds.  derive(seed, a) = splitmix64 output of state (seed ^ mix(a));
// string tags are first hashed with 64-bit FNV-1a.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

// xoshiro256** 1.0 with the 256-bit state filled by four consecutive
// splitmix64 outputs of the seed.  Stream id "xoshiro256ss-splitmix64-v1":
//   uniform()  = (next() >> 11) * 2^-53
//   below(k)   = Lemire multiply-shift with rejection
//   normal()   = Box-Muller on (1 - uniform(), uniform()), both values used
class Rng {
 public:
  using result_type = std::uint64_t;
  static constexpr const char* kStreamId = "xoshiro256ss-splitmix64-v1";

  explicit Rng(std::uint64_t seed);

  result_type operator()();
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  double uniform();
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }
  double normal();

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace surplus
