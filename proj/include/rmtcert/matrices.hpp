#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "rmtcert/exact.hpp"
#include "rmtcert/quadrature.hpp"

namespace rmtcert {

// The four (m-1)x(m-1) matrices T = I - K, K = scalar * Q B, with
// Q_ij = Q(n - 2i + 2j) (n = 2m-1), B_ij = 2m C(n, j-i) and
// scalar = (m!)^2 / (m (2m)!) = 1 / (m C(2m, m)).
struct MatrixBundle {
  int m = 0;
  int n = 0;
  Eigen::MatrixXd Q_mat;
  std::vector<BigInt> B_mat;  // row-major exact integers
  BigRat scalar;
  Eigen::MatrixXd K_mat;
  Eigen::MatrixXd T_mat;
  std::map<int, double> q_values;  // memoized Q(q) by odd argument

  const BigInt& B(int i, int j) const { return B_mat[i * (m - 1) + j]; }
};

MatrixBundle build_bundle(int m, const QuadratureSpec& spec = {});

// det T via pivoted LU.
double det_T(const MatrixBundle& bundle);

// det(I - K) = exp(-sum_{l>=1} tr(K^l)/l), truncated once the term drops
// below term_tol; requires r(K) < 1.
double det_trace_log(const Eigen::MatrixXd& K, int max_terms = 200,
                     double term_tol = 1e-16);

// Rank-one comparison matrix L_{ik} = sum_{l=0}^{k-1} C(n, l) and the
// resulting eigenvalue bound lambda_1(K') = 2 * 1.827 * scalar * lambda_1(L).
struct RankOneBound {
  int m = 0;
  std::vector<BigInt> L_row;  // L_{1k}, k = 1..m-1
  BigInt lambda1_L;           // direct sum, checked against the closed form
  double lambda1_Kprime = 0.0;
};

RankOneBound rank_one_bound(int m);

// K'_ij = 2 * 1.827 * scalar * L_{1j}, constant along columns.
Eigen::MatrixXd kprime_matrix(int m);

// Spectral radius via dense eigenvalue moduli.
double spectral_radius(const Eigen::MatrixXd& X);

// Diagnostic variant: ||X^j||_inf^{1/j} refinement.
double spectral_radius_power(const Eigen::MatrixXd& X, int max_iter = 10000,
                             double rel_tol = 1e-12);

struct Lemma2Report {
  bool dominance_ok = false;    // |K_ij| <= K'_ij entrywise
  bool contraction_ok = false;  // r(K') < 1
  double det_I_minus_K = 0.0;
  double det_I_minus_Kprime = 0.0;
  bool inequality_ok = false;   // det(I-K) >= det(I-K') > 0
  double tracelog_det = 0.0;    // truncated trace-log value for I-K
  bool tracelog_ok = false;
  bool precondition_ok() const { return dominance_ok && contraction_ok; }
  bool ok() const { return precondition_ok() && inequality_ok && tracelog_ok; }
};

Lemma2Report lemma2_check(const Eigen::MatrixXd& K,
                          const Eigen::MatrixXd& Kprime);

} // namespace rmtcert
