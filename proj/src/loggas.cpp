#include "rmtcert/loggas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "rmtcert/exact.hpp"
#include "rmtcert/matrices.hpp"

namespace rmtcert {

double Potential::operator()(double x) const {
  const double x2 = x * x;
  double acc = 0.0;
  for (auto it = even_coeffs.rbegin(); it != even_coeffs.rend(); ++it)
    acc = acc * x2 + *it;
  return acc;
}

Potential Potential::scaled(double factor) const {
  Potential result = *this;
  for (double& c : result.even_coeffs) c *= factor;
  return result;
}

Potential Potential::monomial(int m, double kappa) {
  Potential v;
  v.degree_half = m;
  v.even_coeffs.assign(m + 1, 0.0);
  v.even_coeffs[m] = kappa;
  return v;
}

std::string method_name(LogGasMethod method) {
  return method == LogGasMethod::tensor_quadrature ? "tensor-quadrature"
                                                   : "monte-carlo";
}

LogGasMethod default_method(int beta, int k) {
  if (beta == 1) return k <= 2 ? LogGasMethod::tensor_quadrature
                               : LogGasMethod::monte_carlo;
  return k <= 4 ? LogGasMethod::tensor_quadrature
                : LogGasMethod::monte_carlo;
}

double log_boltzmann_weight(const Potential& V, int beta,
                            const std::vector<double>& sample) {
  // sort so the value is bitwise permutation invariant
  std::vector<double> xs = sample;
  std::sort(xs.begin(), xs.end());
  double acc = 0.0;
  for (double x : xs) acc -= V(x);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      acc += beta * std::log(std::abs(xs[i] - xs[j]));
  return acc;
}

namespace {

void validate(const Potential& V, int beta, int k) {
  if (V.degree_half < 1 ||
      V.even_coeffs.size() != static_cast<size_t>(V.degree_half) + 1 ||
      V.even_coeffs.back() <= 0.0)
    throw std::invalid_argument(
        "partition_function: potential must be even with a positive "
        "leading coefficient");
  if (beta != 1 && beta != 2 && beta != 4)
    throw std::domain_error("partition_function: beta must be 1, 2 or 4");
  if (k < 1) throw std::domain_error("partition_function: requires k >= 1");
}

double truncation_radius(const Potential& V, int beta, int k,
                         double tail_bound) {
  // integrand at |x| = r bounded by e^{-V(r)} (2r+1)^{k + beta k(k-1)/2}
  const double growth = k + 0.5 * beta * k * (k - 1);
  for (double r = 1.0; r <= 50.0; r += 0.25) {
    if (-V(r) + growth * std::log(2.0 * r + 1.0) < std::log(tail_bound))
      return r;
  }
  return 50.0;
}

double pair_power(double diff, int beta) {
  double d2 = diff * diff;
  if (beta == 1) return std::abs(diff);
  if (beta == 2) return d2;
  return d2 * d2;  // beta == 4
}

double factorial_d(int k) { return to_double(BigRat(factorial(k))); }

// Product Gauss grid for even beta (smooth integrand), divided by k!.
double tensor_smooth(const Potential& V, int beta, int k, double radius,
                     int order) {
  GaussNodes g = gauss_legendre(order);
  const int n = order;
  std::vector<double> xs(n), ws(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = radius * g.nodes[i];
    ws[i] = radius * g.weights[i] * std::exp(-V(xs[i]));
  }
  std::vector<int> idx(k, 0);
  double sum = 0.0;
  for (;;) {
    double term = 1.0;
    for (int a = 0; a < k; ++a) term *= ws[idx[a]];
    for (int a = 0; a < k && term != 0.0; ++a)
      for (int b = a + 1; b < k; ++b)
        term *= pair_power(xs[idx[a]] - xs[idx[b]], beta);
    sum += term;
    int level = k - 1;
    while (level >= 0 && ++idx[level] == n) idx[level--] = 0;
    if (level < 0) break;
  }
  return sum / factorial_d(k);
}

// beta = 1, k = 2: split along the diagonal; Z = int int_{x<y} (y-x) ...
double tensor_triangle(const Potential& V, double radius, int order) {
  GaussNodes g = gauss_legendre(order);
  const int n = order;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = radius * g.nodes[i];
    double wx = radius * g.weights[i] * std::exp(-V(x));
    double half = 0.5 * (radius - x);
    double inner = 0.0;
    for (int j = 0; j < n; ++j) {
      double y = x + half * (g.nodes[j] + 1.0);
      inner += half * g.weights[j] * (y - x) * std::exp(-V(y));
    }
    sum += wx * inner;
  }
  return sum;
}

LogGasEstimate tensor_estimate(const Potential& V, int beta, int k,
                               const LogGasSpec& spec) {
  if (k > 4)
    throw std::domain_error("partition_function: tensor quadrature needs k <= 4");
  if (beta == 1 && k > 2)
    throw std::domain_error(
        "partition_function: beta=1 tensor quadrature needs k <= 2");

  LogGasEstimate est;
  est.method = LogGasMethod::tensor_quadrature;
  est.beta = beta;
  est.k = k;
  est.domain_radius = truncation_radius(V, beta, k, spec.tail_bound);

  if (k == 1) {
    IntegralResult r = integrate([&V](double x) { return std::exp(-V(x)); },
                                 -est.domain_radius, est.domain_radius);
    est.value = r.value;
    est.error = std::max(r.error_estimate, 1e-15 * std::abs(r.value));
    est.samples_or_nodes = r.panels_used;
  } else {
    double coarse, fine;
    if (beta == 1) {
      coarse = tensor_triangle(V, est.domain_radius, spec.nodes_coarse);
      fine = tensor_triangle(V, est.domain_radius, spec.nodes_fine);
    } else {
      coarse = tensor_smooth(V, beta, k, est.domain_radius, spec.nodes_coarse);
      fine = tensor_smooth(V, beta, k, est.domain_radius, spec.nodes_fine);
    }
    est.value = fine;
    est.error = std::max(std::abs(fine - coarse), 1e-15 * std::abs(fine));
    est.samples_or_nodes = 1;
    for (int a = 0; a < k; ++a) est.samples_or_nodes *= spec.nodes_fine;
  }
  est.log_value = std::log(est.value);
  return est;
}

// Exactly sampleable piecewise-linear fit of e^{-V} on [-R, R].
class LinearSampler {
 public:
  LinearSampler(const Potential& V, double radius, int cells = 4096)
      : radius_(radius), cells_(cells), dx_(2.0 * radius / cells) {
    f_.resize(cells_ + 1);
    for (int i = 0; i <= cells_; ++i)
      f_[i] = std::exp(-V(-radius_ + i * dx_));
    cdf_.resize(cells_);
    double acc = 0.0;
    for (int i = 0; i < cells_; ++i) {
      acc += 0.5 * (f_[i] + f_[i + 1]) * dx_;
      cdf_[i] = acc;
    }
    total_ = acc;
  }

  double sample(double u) const {
    double target = u * total_;
    int cell = static_cast<int>(
        std::upper_bound(cdf_.begin(), cdf_.end(), target) - cdf_.begin());
    cell = std::min(cell, cells_ - 1);
    double below = cell > 0 ? cdf_[cell - 1] : 0.0;
    double c = (target - below) / dx_;  // integral of the linear piece
    double fa = f_[cell], fb = f_[cell + 1];
    double df = fb - fa;
    double t;
    if (std::abs(df) <= 1e-14 * std::max(fa, fb)) {
      t = c / fa;
    } else {
      t = (-fa + std::sqrt(fa * fa + 2.0 * df * c)) / df;
    }
    t = std::clamp(t, 0.0, 1.0);
    return -radius_ + (cell + t) * dx_;
  }

  double density(double x) const {
    double pos = (x + radius_) / dx_;
    int cell = std::clamp(static_cast<int>(pos), 0, cells_ - 1);
    double t = pos - cell;
    return (f_[cell] * (1.0 - t) + f_[cell + 1] * t) / total_;
  }

 private:
  double radius_;
  int cells_;
  double dx_;
  std::vector<double> f_;
  std::vector<double> cdf_;
  double total_ = 0.0;
};

struct ChunkStats {
  double sum = 0.0;
  double sum_sq = 0.0;
  long count = 0;
};

constexpr long kChunkSize = 65536;

LogGasEstimate mc_estimate(const Potential& V, int beta, int k,
                           const LogGasSpec& spec) {
  if (k > 12)
    throw std::domain_error("partition_function: Monte Carlo needs k <= 12");

  LogGasEstimate est;
  est.method = LogGasMethod::monte_carlo;
  est.beta = beta;
  est.k = k;
  est.domain_radius = truncation_radius(V, beta, k, spec.tail_bound);

  LinearSampler sampler(V, est.domain_radius);
  const long nchunks = (spec.mc_samples + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkStats> stats(nchunks);

  // per-chunk deterministic substreams: identical results for any job count
  auto run_chunk = [&](long chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                      static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(beta),
                      static_cast<std::uint32_t>(k),
                      static_cast<std::uint32_t>(chunk)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    long count = std::min(kChunkSize, spec.mc_samples - chunk * kChunkSize);
    ChunkStats cs;
    cs.count = count;
    std::vector<double> xs(k);
    for (long s = 0; s < count; ++s) {
      double log_density = 0.0;
      for (int a = 0; a < k; ++a) {
        xs[a] = sampler.sample(unif(rng));
        log_density += std::log(sampler.density(xs[a]));
      }
      double w = std::exp(log_boltzmann_weight(V, beta, xs) - log_density);
      cs.sum += w;
      cs.sum_sq += w * w;
    }
    stats[chunk] = cs;
  };

  std::atomic<long> next{0};
  auto worker = [&]() {
    for (;;) {
      long chunk = next.fetch_add(1);
      if (chunk >= nchunks) return;
      run_chunk(chunk);
    }
  };
  int threads = std::max(1, spec.jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads - 1; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  // compensated reduction in fixed chunk order
  double sum = 0.0, comp = 0.0, sum_sq = 0.0, comp_sq = 0.0;
  long n = 0;
  for (const ChunkStats& cs : stats) {
    double y = cs.sum - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    double y2 = cs.sum_sq - comp_sq;
    double t2 = sum_sq + y2;
    comp_sq = (t2 - sum_sq) - y2;
    sum_sq = t2;
    n += cs.count;
  }
  double mean = sum / n;
  double variance = std::max(0.0, sum_sq / n - mean * mean);
  double kf = factorial_d(k);
  est.value = mean / kf;
  est.error = std::sqrt(variance / n) / kf;
  est.samples_or_nodes = n;
  est.log_value = std::log(est.value);
  return est;
}

} // namespace

LogGasEstimate partition_function(const Potential& V, int beta, int k,
                                  LogGasMethod method,
                                  const LogGasSpec& spec) {
  validate(V, beta, k);
  return method == LogGasMethod::tensor_quadrature
             ? tensor_estimate(V, beta, k, spec)
             : mc_estimate(V, beta, k, spec);
}

RatioEstimate universality_ratio(int m, int N, const Potential& V,
                                 const LogGasSpec& spec) {
  if (N < 2 || N % 2 != 0)
    throw std::domain_error("universality_ratio: N must be even and >= 2");
  if (V.degree_half != m)
    throw std::invalid_argument(
        "universality_ratio: potential degree must be 2m");

  RatioEstimate est;
  est.N = N;
  const Potential V2 = V.scaled(2.0);
  est.z4 = partition_function(V2, 4, N / 2, default_method(4, N / 2), spec);
  est.z1 = partition_function(V, 1, N, default_method(1, N), spec);
  est.z2 = partition_function(V2, 2, N, default_method(2, N), spec);

  // 2^N (N/2)! exact, applied in log space
  double log_denom = N * std::log(2.0) +
                     std::log(to_double(BigRat(factorial(N / 2))));
  double log_ratio =
      est.z4.log_value + est.z1.log_value - est.z2.log_value - log_denom;
  est.ratio = std::exp(log_ratio);

  double rel = 0.0;
  for (const LogGasEstimate* z : {&est.z4, &est.z1, &est.z2}) {
    double r = z->error / z->value;
    rel += r * r;
  }
  est.error = std::abs(est.ratio) * std::sqrt(rel);
  est.inconclusive = est.error > std::abs(est.ratio);
  return est;
}

std::vector<ConvergenceRow> convergence_study(int m,
                                              const std::vector<int>& N_list,
                                              const Potential& V,
                                              const LogGasSpec& spec) {
  const double det_ref = det_T(build_bundle(m));
  std::vector<ConvergenceRow> rows;
  for (int N : N_list) {
    RatioEstimate est = universality_ratio(m, N, V, spec);
    ConvergenceRow row;
    row.N = N;
    row.ratio = est.ratio;
    row.error = est.error;
    row.det_T_ref = det_ref;
    row.distance = std::abs(est.ratio - det_ref);
    rows.push_back(row);
  }
  return rows;
}

} // namespace rmtcert
