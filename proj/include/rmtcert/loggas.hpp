#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmtcert/quadrature.hpp"

namespace rmtcert {

// Even confining polynomial V(x) = sum_{j=0}^{m} c_j x^{2j}, c_m > 0.
struct Potential {
  int degree_half = 0;             // m
  std::vector<double> even_coeffs; // c_0 .. c_m

  double operator()(double x) const;
  Potential scaled(double factor) const;  // factor * V
  static Potential monomial(int m, double kappa = 1.0);  // kappa x^{2m}
};

enum class LogGasMethod { tensor_quadrature, monte_carlo };

std::string method_name(LogGasMethod method);

struct LogGasSpec {
  int nodes_coarse = 48;  // per-dimension Gauss order (error reference)
  int nodes_fine = 64;
  long mc_samples = 400000;
  std::uint64_t seed = 12345;
  int jobs = 1;
  double tail_bound = 1e-16;  // truncation target for e^{-V} tails
};

struct LogGasEstimate {
  double value = 0.0;
  double log_value = 0.0;
  double error = 0.0;  // on value
  LogGasMethod method = LogGasMethod::tensor_quadrature;
  int beta = 0;
  int k = 0;
  long samples_or_nodes = 0;
  double domain_radius = 0.0;
};

// (1/k!) int...int prod_{i<j} |x_i-x_j|^beta e^{-sum V(x_i)} dx.
// Tensor quadrature: k <= 4, and k <= 2 when beta = 1 (the |.| kink is
// handled by splitting along the diagonal). Monte Carlo: k <= 12,
// importance-sampled from a piecewise-linear fit of e^{-V}.
LogGasEstimate partition_function(const Potential& V, int beta, int k,
                                  LogGasMethod method,
                                  const LogGasSpec& spec = {});

LogGasMethod default_method(int beta, int k);

// beta * sum_{i<j} log|x_i-x_j| - sum_i V(x_i); permutation invariant.
double log_boltzmann_weight(const Potential& V, int beta,
                            const std::vector<double>& xs);

struct RatioEstimate {
  int N = 0;
  double ratio = 0.0;
  double error = 0.0;
  bool inconclusive = false;  // error bar larger than the value
  LogGasEstimate z4, z1, z2;
};

// Z_{2V,4,N/2} Z_{V,1,N} / (2^N (N/2)! Z_{2V,2,N}), N even.
RatioEstimate universality_ratio(int m, int N, const Potential& V,
                                 const LogGasSpec& spec = {});

struct ConvergenceRow {
  int N = 0;
  double ratio = 0.0;
  double error = 0.0;
  double det_T_ref = 0.0;
  double distance = 0.0;  // |ratio - det_T_ref|
};

// Exploratory: finite-N ratios next to det T^{[m-1]}; no convergence
// tolerance is asserted.
std::vector<ConvergenceRow> convergence_study(int m,
                                              const std::vector<int>& N_list,
                                              const Potential& V,
                                              const LogGasSpec& spec = {});

} // namespace rmtcert
