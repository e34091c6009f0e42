#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rmtcert/matrices.hpp"

using namespace rmtcert;

namespace {
// frozen from a 30-digit oracle run
constexpr double kDetT1 = 0.84967936855888599;  // m = 2
constexpr double kDetT2 = 0.79788398946617251;  // m = 3
} // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, -1) == 0);  // C(n,k) = 0 for k < 0
  CHECK(binomial(10, 11) == 0);
  CHECK(binomial(1000, 500) > BigInt(1));
  for (int m = 2; m <= 60; ++m)
    CHECK(binomial(2 * m, m) == 2 * binomial(2 * m - 1, m - 1));
}

TEST_CASE("bundle for m=2 is the hand-checked 1x1 case") {
  MatrixBundle b = build_bundle(2);
  REQUIRE(b.K_mat.rows() == 1);
  CHECK(b.B(0, 0) == 4);  // 2m C(3,0)
  CHECK(b.scalar == BigRat(1, 12));
  double q3 = b.q_values.at(3);
  CHECK(b.T_mat(0, 0) == doctest::Approx(1.0 - q3 / 3.0).epsilon(1e-15));
  CHECK(det_T(b) == doctest::Approx(kDetT1).epsilon(1e-10));
}

TEST_CASE("bundle for m=3 uses the arguments {3,5,7}") {
  MatrixBundle b = build_bundle(3);
  REQUIRE(b.q_values.size() == 3);
  CHECK(b.q_values.count(3) == 1);
  CHECK(b.q_values.count(5) == 1);
  CHECK(b.q_values.count(7) == 1);
  CHECK(b.Q_mat(0, 0) == b.q_values.at(5));
  CHECK(b.Q_mat(1, 0) == b.q_values.at(3));
  CHECK(b.Q_mat(0, 1) == b.q_values.at(7));
  CHECK(det_T(b) == doctest::Approx(kDetT2).epsilon(1e-10));
}

TEST_CASE("bundle invariants for a larger m") {
  int m = 7;
  MatrixBundle b = build_bundle(m);
  for (const auto& [q, value] : b.q_values) {
    CHECK(q % 2 == 1);
    CHECK(q >= 3);
    CHECK(q <= 4 * m - 5);
  }
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j) {
      CHECK(b.T_mat(i, j) ==
            doctest::Approx((i == j ? 1.0 : 0.0) - b.K_mat(i, j))
                .epsilon(1e-15));
      if (j < i) CHECK(b.B(i, j) == 0);
    }
  CHECK_THROWS_AS(build_bundle(1), std::domain_error);
}

TEST_CASE("determinant of the identity") {
  MatrixBundle b = build_bundle(4);
  b.K_mat.setZero();
  b.T_mat = Eigen::MatrixXd::Identity(3, 3);
  CHECK(det_T(b) == 1.0);
}

TEST_CASE("rank-one bound hand checks") {
  RankOneBound r2 = rank_one_bound(2);
  REQUIRE(r2.L_row.size() == 1);
  CHECK(r2.L_row[0] == 1);
  CHECK(r2.lambda1_L == 1);

  RankOneBound r3 = rank_one_bound(3);
  REQUIRE(r3.L_row.size() == 2);
  CHECK(r3.L_row[0] == 1);
  CHECK(r3.L_row[1] == 6);
  CHECK(r3.lambda1_L == 7);  // (3/2) C(5,2) - 2^3 = 15 - 8
}

TEST_CASE("lambda1(K') stays below 0.9135 up to m=500") {
  for (int m = 2; m <= 500; ++m) {
    RankOneBound r = rank_one_bound(m);  // throws on direct/closed mismatch
    CHECK(r.lambda1_Kprime <= 0.9135 + 1e-12);
    CHECK(r.lambda1_Kprime > 0.0);
  }
}

TEST_CASE("the 0.9135 cancellation is exact in rational arithmetic") {
  for (int m : {2, 3, 10, 100, 500}) {
    BigRat scalar(BigInt(1), BigInt(m) * binomial(2 * m, m));
    BigRat lhs = BigRat(2 * 1827, 1000) * scalar * BigRat(BigInt(m), 2) *
                 BigRat(binomial(2 * m - 1, m - 1));
    CHECK(lhs == BigRat(9135, 10000));
  }
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(Eigen::MatrixXd::Zero(3, 3)) == 0.0);
  CHECK(spectral_radius_power(Eigen::MatrixXd::Zero(3, 3)) == 0.0);

  // rank-one L for m=3 has the single eigenvalue 7
  Eigen::MatrixXd L(2, 2);
  L << 1, 6, 1, 6;
  CHECK(spectral_radius(L) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(spectral_radius_power(L) == doctest::Approx(7.0).epsilon(1e-8));

  CHECK_THROWS_AS(spectral_radius(Eigen::MatrixXd::Zero(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("r(K) <= r(K') across the verified range") {
  for (int m : {2, 5, 10, 25, 50}) {
    MatrixBundle b = build_bundle(m);
    CHECK(spectral_radius(b.K_mat) <=
          spectral_radius(kprime_matrix(m)) + 1e-12);
  }
}

TEST_CASE("kprime matrix is constant along columns") {
  Eigen::MatrixXd kp = kprime_matrix(4);
  for (int j = 0; j < 3; ++j)
    for (int i = 1; i < 3; ++i) CHECK(kp(i, j) == kp(0, j));
}

TEST_CASE("lemma 2 on the zero matrix") {
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(2, 2);
  Lemma2Report r = lemma2_check(z, z);
  CHECK(r.ok());
  CHECK(r.det_I_minus_K == 1.0);
  CHECK(r.det_I_minus_Kprime == 1.0);
}

TEST_CASE("lemma 2 for the m=4 bundle") {
  MatrixBundle b = build_bundle(4);
  Lemma2Report r = lemma2_check(b.K_mat, kprime_matrix(4));
  CHECK(r.precondition_ok());
  CHECK(r.inequality_ok);
  // trace-log identity vs the LU determinant
  CHECK(std::abs(r.tracelog_det - r.det_I_minus_K) <= 1e-10);
}

TEST_CASE("lemma 2 holds on random dominated pairs") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_real_distribution<double> sign(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 2 + trial % 5;
    Eigen::MatrixXd kp(dim, dim), k(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) kp(i, j) = unif(rng);
    kp *= 0.9 / std::max(spectral_radius(kp), 1e-6);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) k(i, j) = kp(i, j) * sign(rng);
    Lemma2Report r = lemma2_check(k, kp);
    REQUIRE(r.precondition_ok());
    CHECK(r.inequality_ok);
    CHECK(r.tracelog_ok);
  }
}

TEST_CASE("trace-log series matches LU determinants") {
  for (int m : {2, 6, 12, 20}) {
    MatrixBundle b = build_bundle(m);
    CHECK(std::abs(det_T(b) - det_trace_log(b.K_mat)) <= 1e-9);
  }
}
