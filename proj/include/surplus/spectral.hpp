#pragma once

#include <string_view>

#include "surplus/graph.hpp"
#include "surplus/vectors.hpp"

namespace surplus {

enum class SpectralMethod { exact_symmetric_solve, shifted_power_iteration };
std::string_view to_string(SpectralMethod m);

struct SpectralReport {
  double lambda_min = 0.0;
  SpectralMethod method = SpectralMethod::exact_symmetric_solve;
  std::size_t iterations = 0;
  double residual = 0.0;     // max-norm of A x - lambda x for the unit eigenvector
  double upper_bound = 0.0;  // m/2 + |lambda_min| n/4
  std::vector<double> eigenvector;
};

inline constexpr std::size_t kJacobiLimit = 64;

// Cyclic Jacobi for n <= 64, otherwise power iteration on Delta I - A with
// tolerance 1e-10 and at most 1e5 iterations (Error when it does not
// converge).  Requires m >= 1.
SpectralReport lambda_min(const Graph& g);
double eigenvalue_upper_bound(const Graph& g);
// bound_report with lambda_min and |lambda_min| n/4 filled in when m >= 1.
BoundReport bound_report_with_spectrum(const Graph& g);

// Reads (n, d, eta, mu, s) off g; PreconditionError unless g is strongly
// regular with at least one non-adjacent pair.
SrgParams srg_params(const Graph& g);

struct SrgEigenvalue {
  double lambda_min = 0.0;
  SrgRegime regime = SrgRegime::balanced;
  // |s|/(nd), sqrt(d) or n d^2/s for the three regimes.
  double comparison = 0.0;
};

// (eta - mu - sqrt((eta-mu)^2 + 4(d - mu)))/2 after validating p.
SrgEigenvalue srg_lambda_min(const SrgParams& p);

}  // namespace surplus
