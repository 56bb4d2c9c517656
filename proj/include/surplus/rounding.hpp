#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "surplus/graph.hpp"

namespace surplus {

// One real vector per vertex.  Stored densely when dim <= 2000, otherwise
// as sorted (index, value) rows.  Vectors start at zero; validate() rejects
// zero or non-finite vectors.
class VectorAssignment {
 public:
  struct Entry {
    std::uint32_t index;
    double value;
  };
  static constexpr std::size_t kDenseLimit = 2000;

  VectorAssignment() = default;
  VectorAssignment(std::size_t count, std::size_t dim, std::string label);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  bool dense() const { return dense_; }

  void set(Vertex v, std::size_t coord, double value);
  double get(Vertex v, std::size_t coord) const;
  double dot(Vertex u, Vertex v) const;
  double norm2(Vertex v) const;
  double project(Vertex v, std::span<const double> z) const;
  // Non-zero entries of vector v in coordinate order.
  std::vector<Entry> entries(Vertex v) const;

  void validate() const;
  // "v: i:value i:value ..." one line per vector.
  std::string debug_text() const;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::string label_;
  bool dense_ = true;
  std::vector<double> values_;
  std::vector<std::vector<Entry>> rows_;
};

// Cosine of the angle between x^u and x^v after the tolerance check.
double cosine_similarity(const VectorAssignment& va, Vertex u, Vertex v);

// Expected crossing of hyperplane rounding: m/2 - (1/pi) sum arcsin(cos).
double analytic_expected_cut(const Graph& g, const VectorAssignment& va);
double analytic_expected_surplus(const Graph& g, const VectorAssignment& va);

struct RoundingOutcome {
  Cut cut;
  std::size_t trials = 0;
  std::size_t best_crossing = 0;
  std::size_t best_trial = 0;
  double analytic_expectation = 0.0;
  double mean_crossing = 0.0;
  double stddev_crossing = 0.0;  // sample standard deviation
};

// Trial t draws z with i.i.d. N(0,1) coordinates from Rng(derive_seed(seed, t))
// and puts v on side 1 iff <x^v, z> < 0.  The kept cut is the first trial
// attaining the maximum crossing.
RoundingOutcome hyperplane_round(const Graph& g, const VectorAssignment& va, std::uint64_t seed,
                                 std::size_t trials);

// y^v = x^v followed by the unit vector e_v in n extra coordinates.
VectorAssignment augment_with_identity(const Graph& g, const VectorAssignment& va);

struct EdgeProduct {
  double a = 0.0;
  double b = 0.0;
};

// If <x^u, x^v> <= -a_uv + b_uv on every edge and max_x_norm2 >= ||x^v||^2,
// then the augmented vectors y^v satisfy 1 <= ||y^v||^2 <= 1 + max_x_norm2,
// and arcsin(x) <= (pi/2) b - a gives the expected surplus bound
//   sum a / (pi * (1 + max_x_norm2)) - sum b / (2 * (1 + min_x_norm2)).
double surplus_lower_bound_from_products(std::span<const EdgeProduct> products, double max_x_norm2,
                                         double min_x_norm2 = 0.0);

}  // namespace surplus
