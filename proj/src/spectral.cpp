#include "surplus/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "surplus/errors.hpp"
#include "surplus/rng.hpp"

namespace surplus {

std::string_view to_string(SpectralMethod m) {
  return m == SpectralMethod::exact_symmetric_solve ? "exact_symmetric_solve" : "shifted_power_iteration";
}

namespace {

double residual_of(const Graph& g, const std::vector<double>& x, double lambda) {
  double r = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    double ax = 0.0;
    for (Vertex w : g.neighbors(v)) ax += x[w];
    r = std::max(r, std::abs(ax - lambda * x[v]));
  }
  return r;
}

SpectralReport jacobi(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<double> a(n * n, 0.0), v(n * n, 0.0);
  for (Vertex i = 0; i < n; ++i) {
    v[i * n + i] = 1.0;
    for (Vertex j : g.neighbors(i)) a[i * n + j] = 1.0;
  }
  SpectralReport rep;
  rep.method = SpectralMethod::exact_symmetric_solve;
  for (std::size_t sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-26) break;
    ++rep.iterations;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (a[i * n + i] < a[best * n + best]) best = i;
  rep.lambda_min = a[best * n + best];
  rep.eigenvector.resize(n);
  for (std::size_t k = 0; k < n; ++k) rep.eigenvector[k] = v[k * n + best];
  return rep;
}

SpectralReport power_iteration(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const double shift = static_cast<double>(degree_stats(g).max);
  SpectralReport rep;
  rep.method = SpectralMethod::shifted_power_iteration;
  std::vector<double> x(n), y(n);
  Rng rng(0x5eedULL);
  for (auto& xi : x) xi = rng.normal();
  auto normalize = [](std::vector<double>& z) {
    double s = 0.0;
    for (double zi : z) s += zi * zi;
    s = std::sqrt(s);
    for (double& zi : z) zi /= s;
  };
  normalize(x);
  double lambda = 0.0;
  for (std::size_t it = 1; it <= 100'000; ++it) {
    for (Vertex v = 0; v < n; ++v) {
      double ax = 0.0;
      for (Vertex w : g.neighbors(v)) ax += x[w];
      y[v] = shift * x[v] - ax;
    }
    double rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) rq += x[i] * y[i];
    lambda = shift - rq;
    rep.iterations = it;
    if (residual_of(g, x, lambda) <= 1e-10) break;
    normalize(y);
    std::swap(x, y);
  }
  rep.lambda_min = lambda;
  rep.eigenvector = x;
  return rep;
}

}  // namespace

SpectralReport lambda_min(const Graph& g) {
  require(g.num_edges() >= 1, "graph has no edges");
  SpectralReport rep = g.num_vertices() <= kJacobiLimit ? jacobi(g) : power_iteration(g);
  rep.residual = residual_of(g, rep.eigenvector, rep.lambda_min);
  if (!(rep.residual <= 1e-8 * static_cast<double>(g.num_vertices())))
    throw Error("eigenvalue solver did not converge (residual " + std::to_string(rep.residual) + ")");
  rep.upper_bound = static_cast<double>(g.num_edges()) / 2.0 +
                    std::abs(rep.lambda_min) * static_cast<double>(g.num_vertices()) / 4.0;
  return rep;
}

double eigenvalue_upper_bound(const Graph& g) { return lambda_min(g).upper_bound; }

BoundReport bound_report_with_spectrum(const Graph& g) {
  BoundReport b = bound_report(g);
  if (g.num_edges() == 0) return b;
  const SpectralReport s = lambda_min(g);
  b.lambda_min = s.lambda_min;
  b.eigenvalue_surplus_bound = std::abs(s.lambda_min) * static_cast<double>(g.num_vertices()) / 4.0;
  return b;
}

SrgParams srg_params(const Graph& g) {
  const std::size_t n = g.num_vertices();
  require(n >= 2 && is_regular(g), "graph is not regular");
  SrgParams p;
  p.n = n;
  p.d = g.degree(0);
  bool have_eta = false, have_mu = false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = popcount_and(g.row(u), g.row(v));
      if (g.adjacent(u, v)) {
        require(!have_eta || c == p.eta, "adjacent pairs have different codegrees: not strongly regular");
        p.eta = c;
        have_eta = true;
      } else {
        require(!have_mu || c == p.mu, "non-adjacent pairs have different codegrees: not strongly regular");
        p.mu = c;
        have_mu = true;
      }
    }
  require(have_eta && have_mu, "strongly regular parameters need both adjacent and non-adjacent pairs");
  p.s = triangle_surplus(g);
  return p;
}

SrgEigenvalue srg_lambda_min(const SrgParams& p) {
  p.validate();
  const double eta = static_cast<double>(p.eta), mu = static_cast<double>(p.mu), d = static_cast<double>(p.d);
  const double n = static_cast<double>(p.n);
  SrgEigenvalue out;
  out.lambda_min = 0.5 * (eta - mu - std::sqrt((eta - mu) * (eta - mu) + 4.0 * (d - mu)));
  out.regime = srg_regime(p);
  switch (out.regime) {
    case SrgRegime::many_fewer: out.comparison = std::abs(p.s) / (n * d); break;
    case SrgRegime::balanced: out.comparison = std::sqrt(d); break;
    case SrgRegime::many_more: out.comparison = n * d * d / p.s; break;
  }
  return out;
}

}  // namespace surplus
