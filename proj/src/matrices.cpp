#include "rmtcert/matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace rmtcert {
namespace {

// 2 * 1.827, with 1.827 read as the exact rational 1827/1000.
const BigRat kTwo1827 = BigRat(BigInt(2 * 1827), BigInt(1000));

BigRat bundle_scalar(int m) {
  // (m!)^2 / (m (2m)!) = 1 / (m C(2m, m))
  return BigRat(BigInt(1), BigInt(m) * binomial(2 * m, m));
}

} // namespace

MatrixBundle build_bundle(int m, const QuadratureSpec& spec) {
  if (m < 2) throw std::domain_error("build_bundle: requires m >= 2");
  const int dim = m - 1;
  const int n = 2 * m - 1;

  MatrixBundle bundle;
  bundle.m = m;
  bundle.n = n;
  bundle.scalar = bundle_scalar(m);

  // distinct Q arguments: n + 2d for d in [-(m-2), m-2]
  for (int d = -(m - 2); d <= m - 2; ++d) {
    int q = n + 2 * d;
    bundle.q_values.emplace(q, q_of_q(q, m, spec));
  }

  bundle.B_mat.resize(static_cast<size_t>(dim) * dim);
  bundle.Q_mat.resize(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      bundle.B_mat[static_cast<size_t>(i) * dim + j] =
          2 * m * binomial(n, j - i);
      bundle.Q_mat(i, j) = bundle.q_values.at(n - 2 * i + 2 * j);
    }
  }

  // scalar * 2m * C(n, d) combined exactly before the float conversion;
  // the individual factors over/underflow in double near m ~ 500.
  std::vector<double> weight(dim);
  for (int d = 0; d < dim; ++d)
    weight[d] = to_double(bundle.scalar * 2 * m * binomial(n, d));

  bundle.K_mat.setZero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double sum = 0.0;
      for (int l = 0; l <= j; ++l)
        sum += bundle.q_values.at(n - 2 * i + 2 * l) * weight[j - l];
      bundle.K_mat(i, j) = sum;
    }
  }
  bundle.T_mat = Eigen::MatrixXd::Identity(dim, dim) - bundle.K_mat;
  return bundle;
}

double det_T(const MatrixBundle& bundle) {
  return bundle.T_mat.partialPivLu().determinant();
}

double det_trace_log(const Eigen::MatrixXd& K, int max_terms,
                     double term_tol) {
  Eigen::MatrixXd power = K;
  double sum = 0.0;
  for (int l = 1; l <= max_terms; ++l) {
    double term = power.trace() / l;
    sum += term;
    if (std::abs(term) < term_tol) break;
    power = power * K;
  }
  return std::exp(-sum);
}

RankOneBound rank_one_bound(int m) {
  if (m < 2) throw std::domain_error("rank_one_bound: requires m >= 2");
  const int n = 2 * m - 1;

  RankOneBound bound;
  bound.m = m;
  BigInt partial = 0;
  BigInt direct = 0;
  for (int k = 1; k <= m - 1; ++k) {
    partial += binomial(n, k - 1);  // L_{1k} = sum_{l=0}^{k-1} C(n, l)
    bound.L_row.push_back(partial);
    direct += partial;
  }

  // closed form (m/2) C(2m-1, m-1) - 2^{2m-3}
  BigRat closed = BigRat(BigInt(m), BigInt(2)) * binomial(2 * m - 1, m - 1) -
                  BigRat(BigInt(1) << (2 * m - 3));
  if (BigRat(direct) != closed)
    throw std::logic_error(
        "rank_one_bound: direct sum disagrees with the closed form");
  bound.lambda1_L = direct;

  if (m <= 500) {
    bound.lambda1_Kprime =
        to_double(kTwo1827 * bundle_scalar(m) * BigRat(direct));
  } else {
    // log-gamma path: 0.9135 - 2*1.827*2^{2m-3} / (m C(2m, m))
    double log_corr = std::log(2.0 * 1.827) + (2 * m - 3) * std::log(2.0) -
                      std::log(static_cast<double>(m)) -
                      (std::lgamma(2.0 * m + 1.0) - 2.0 * std::lgamma(m + 1.0));
    bound.lambda1_Kprime = 0.9135 - std::exp(log_corr);
  }
  return bound;
}

Eigen::MatrixXd kprime_matrix(int m) {
  RankOneBound bound = rank_one_bound(m);
  const int dim = m - 1;
  const BigRat scalar = bundle_scalar(m);
  Eigen::MatrixXd kp(dim, dim);
  for (int j = 0; j < dim; ++j) {
    double entry = to_double(kTwo1827 * scalar * BigRat(bound.L_row[j]));
    for (int i = 0; i < dim; ++i) kp(i, j) = entry;
  }
  return kp;
}

double spectral_radius(const Eigen::MatrixXd& X) {
  if (X.rows() != X.cols())
    throw std::invalid_argument("spectral_radius: matrix must be square");
  if (X.size() == 0) return 0.0;
  return X.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_radius_power(const Eigen::MatrixXd& X, int max_iter,
                             double rel_tol) {
  if (X.rows() != X.cols())
    throw std::invalid_argument("spectral_radius_power: matrix must be square");
  Eigen::MatrixXd power = X;
  double log_scale = 0.0;
  double estimate = 0.0;
  for (int j = 1; j <= max_iter; ++j) {
    double norm = power.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    if (norm == 0.0) return 0.0;
    double next = std::exp((log_scale + std::log(norm)) / j);
    if (j > 1 && std::abs(next - estimate) <= rel_tol * std::abs(next))
      return next;
    estimate = next;
    log_scale += std::log(norm);
    power /= norm;
    power = power * X;
  }
  return estimate;
}

Lemma2Report lemma2_check(const Eigen::MatrixXd& K,
                          const Eigen::MatrixXd& Kprime) {
  if (K.rows() != K.cols() || Kprime.rows() != K.rows() ||
      Kprime.cols() != K.cols())
    throw std::invalid_argument("lemma2_check: dimension mismatch");

  Lemma2Report report;
  report.dominance_ok = (K.cwiseAbs().array() <= Kprime.array()).all();
  report.contraction_ok = spectral_radius(Kprime) < 1.0;

  const Eigen::MatrixXd eye =
      Eigen::MatrixXd::Identity(K.rows(), K.cols());
  report.det_I_minus_K = (eye - K).partialPivLu().determinant();
  report.det_I_minus_Kprime = (eye - Kprime).partialPivLu().determinant();
  report.inequality_ok =
      report.det_I_minus_K >= report.det_I_minus_Kprime - 1e-12 &&
      report.det_I_minus_Kprime > 0.0;

  if (report.contraction_ok) {
    report.tracelog_det = det_trace_log(K);
    report.tracelog_ok =
        std::abs(report.tracelog_det - report.det_I_minus_K) <= 1e-9;
  }
  return report;
}

} // namespace rmtcert
