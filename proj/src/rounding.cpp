#include "surplus/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "surplus/errors.hpp"
#include "surplus/parallel.hpp"
#include "surplus/rng.hpp"

namespace surplus {

VectorAssignment::VectorAssignment(std::size_t count, std::size_t dim, std::string label)
    : n_(count), dim_(dim), label_(std::move(label)), dense_(dim <= kDenseLimit) {
  if (dense_)
    values_.assign(count * dim, 0.0);
  else
    rows_.resize(count);
}

void VectorAssignment::set(Vertex v, std::size_t coord, double value) {
  if (v >= n_ || coord >= dim_) throw UsageError("vector coordinate out of range");
  if (dense_) {
    values_[v * dim_ + coord] = value;
    return;
  }
  auto& row = rows_[v];
  auto it = std::lower_bound(row.begin(), row.end(), coord, [](const Entry& e, std::size_t c) { return e.index < c; });
  if (it != row.end() && it->index == coord) {
    if (value == 0.0)
      row.erase(it);
    else
      it->value = value;
  } else if (value != 0.0) {
    row.insert(it, Entry{static_cast<std::uint32_t>(coord), value});
  }
}

double VectorAssignment::get(Vertex v, std::size_t coord) const {
  if (dense_) return values_[v * dim_ + coord];
  const auto& row = rows_[v];
  auto it = std::lower_bound(row.begin(), row.end(), coord, [](const Entry& e, std::size_t c) { return e.index < c; });
  return it != row.end() && it->index == coord ? it->value : 0.0;
}

double VectorAssignment::dot(Vertex u, Vertex v) const {
  double s = 0.0;
  if (dense_) {
    const double* a = values_.data() + u * dim_;
    const double* b = values_.data() + v * dim_;
    for (std::size_t i = 0; i < dim_; ++i) s += a[i] * b[i];
    return s;
  }
  const auto& a = rows_[u];
  const auto& b = rows_[v];
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].index < b[j].index)
      ++i;
    else if (a[i].index > b[j].index)
      ++j;
    else
      s += a[i++].value * b[j++].value;
  }
  return s;
}

double VectorAssignment::norm2(Vertex v) const { return dot(v, v); }

double VectorAssignment::project(Vertex v, std::span<const double> z) const {
  double s = 0.0;
  if (dense_) {
    const double* a = values_.data() + v * dim_;
    for (std::size_t i = 0; i < dim_; ++i) s += a[i] * z[i];
    return s;
  }
  for (const auto& e : rows_[v]) s += e.value * z[e.index];
  return s;
}

std::vector<VectorAssignment::Entry> VectorAssignment::entries(Vertex v) const {
  if (!dense_) return rows_[v];
  std::vector<Entry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (values_[v * dim_ + i] != 0.0) out.push_back({static_cast<std::uint32_t>(i), values_[v * dim_ + i]});
  return out;
}

void VectorAssignment::validate() const {
  for (Vertex v = 0; v < n_; ++v) {
    bool nonzero = false;
    for (const auto& e : entries(v)) {
      if (!std::isfinite(e.value))
        throw PreconditionError(label_ + ": non-finite entry in vector " + std::to_string(v));
      nonzero = true;
    }
    if (!nonzero) throw PreconditionError(label_ + ": zero vector at vertex " + std::to_string(v));
  }
}

std::string VectorAssignment::debug_text() const {
  std::ostringstream out;
  out.precision(17);
  out << "# " << label_ << " dim " << dim_ << '\n';
  for (Vertex v = 0; v < n_; ++v) {
    out << v << ':';
    for (const auto& e : entries(v)) out << ' ' << e.index << ':' << e.value;
    out << '\n';
  }
  return out.str();
}

double cosine_similarity(const VectorAssignment& va, Vertex u, Vertex v) {
  const double nu = va.norm2(u), nv = va.norm2(v);
  if (nu == 0.0 || nv == 0.0) throw PreconditionError(va.label() + ": zero vector on an edge");
  const double c = va.dot(u, v) / std::sqrt(nu * nv);
  if (!(std::abs(c) <= 1.0 + 1e-9)) throw PreconditionError(va.label() + ": cosine similarity outside [-1, 1]");
  return std::clamp(c, -1.0, 1.0);
}

double analytic_expected_surplus(const Graph& g, const VectorAssignment& va) {
  if (va.size() != g.num_vertices()) throw UsageError("vector assignment does not cover the graph");
  va.validate();
  double s = 0.0;
  for (auto e : g.edges()) s += std::asin(cosine_similarity(va, e.u, e.v));
  return -s / std::numbers::pi;
}

double analytic_expected_cut(const Graph& g, const VectorAssignment& va) {
  return static_cast<double>(g.num_edges()) / 2.0 + analytic_expected_surplus(g, va);
}

namespace {

std::vector<std::uint8_t> round_once(const VectorAssignment& va, std::uint64_t seed, std::vector<double>& z) {
  Rng rng(seed);
  for (auto& x : z) x = rng.normal();
  std::vector<std::uint8_t> side(va.size());
  for (Vertex v = 0; v < va.size(); ++v) side[v] = va.project(v, z) < 0.0 ? 1 : 0;
  return side;
}

}  // namespace

RoundingOutcome hyperplane_round(const Graph& g, const VectorAssignment& va, std::uint64_t seed,
                                 std::size_t trials) {
  if (trials == 0) throw UsageError("hyperplane_round: trials must be positive");
  RoundingOutcome out;
  out.analytic_expectation = analytic_expected_cut(g, va);
  out.trials = trials;
  std::vector<std::size_t> crossing(trials);
  const std::size_t chunk = 64;
  const std::size_t chunks = (trials + chunk - 1) / chunk;
  parallel_for(chunks, [&](std::size_t c) {
    std::vector<double> z(va.dim());
    for (std::size_t t = c * chunk; t < std::min(trials, (c + 1) * chunk); ++t)
      crossing[t] = count_crossing(g, round_once(va, derive_seed(seed, t), z));
  });
  double sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    sum += static_cast<double>(crossing[t]);
    if (crossing[t] > crossing[out.best_trial]) out.best_trial = t;
  }
  out.mean_crossing = sum / static_cast<double>(trials);
  double ss = 0.0;
  for (auto c : crossing) ss += (static_cast<double>(c) - out.mean_crossing) * (static_cast<double>(c) - out.mean_crossing);
  out.stddev_crossing = trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1)) : 0.0;
  std::vector<double> z(va.dim());
  out.cut = Cut(g, round_once(va, derive_seed(seed, out.best_trial), z));
  out.best_crossing = out.cut.crossing();
  check_invariant(out.best_crossing == crossing[out.best_trial], "hyperplane_round: replayed trial disagrees");
  return out;
}

VectorAssignment augment_with_identity(const Graph& g, const VectorAssignment& va) {
  const std::size_t n = g.num_vertices();
  if (va.size() != n) throw UsageError("vector assignment does not cover the graph");
  VectorAssignment out(n, va.dim() + n, va.label() + "+identity");
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& e : va.entries(v)) out.set(v, e.index, e.value);
    out.set(v, va.dim() + v, 1.0);
  }
  return out;
}

double surplus_lower_bound_from_products(std::span<const EdgeProduct> products, double max_x_norm2,
                                         double min_x_norm2) {
  if (max_x_norm2 < 0.0 || min_x_norm2 < 0.0 || min_x_norm2 > max_x_norm2)
    throw UsageError("surplus_lower_bound_from_products: bad norm bounds");
  double sa = 0.0, sb = 0.0;
  for (const auto& p : products) {
    if (p.a < 0.0 || p.b < 0.0) throw UsageError("surplus_lower_bound_from_products: negative a or b");
    sa += p.a;
    sb += p.b;
  }
  return sa / (std::numbers::pi * (1.0 + max_x_norm2)) - sb / (2.0 * (1.0 + min_x_norm2));
}

}  // namespace surplus
