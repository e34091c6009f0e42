#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rmtcert/special_functions.hpp"

using namespace rmtcert;

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("beta coefficients are the exact telescoping products") {
  HPoly p2 = beta_coefficients(2);
  CHECK(p2.betas[0] == BigRat(8, 3));
  CHECK(p2.betas[1] == BigRat(16, 3));

  for (int m : {2, 3, 7, 50, 200}) {
    HPoly p = beta_coefficients(m);
    BigRat sum = 0;
    for (const BigRat& b : p.betas) sum += b;
    CHECK(sum == BigRat(4 * m));                    // h(1) = 4m
    CHECK(p.betas[0] == BigRat(4 * m, 2 * m - 1));  // h(0)
  }
  CHECK_THROWS_AS(beta_coefficients(1), std::domain_error);
}

TEST_CASE("h evaluation at pinned points") {
  CHECK(h_eval(0.0, beta_coefficients(3)) ==
        doctest::Approx(12.0 / 5.0).epsilon(1e-15));
  CHECK(h_eval(1.0, beta_coefficients(2)) ==
        doctest::Approx(8.0).epsilon(1e-15));
  CHECK(h_eval(0.5, beta_coefficients(2)) ==
        doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("h stays within its endpoint range on a grid") {
  for (int m : {2, 5, 20, 200}) {
    HPoly p = beta_coefficients(m);
    double lo = 4.0 * m / (2 * m - 1), hi = 4.0 * m, eps = 1e-9 * m;
    for (double x = 0.0; x <= 1.0 + 1e-12; x += 1e-3) {
      double h = h_eval(std::min(x, 1.0), p);
      CHECK(h >= lo - eps);
      CHECK(h <= hi + eps);
    }
  }
}

TEST_CASE("h satisfies its differential equation") {
  CHECK(std::abs(h_ode_residual(0.3, 2)) <= 1e-12);
  CHECK(std::abs(h_ode_residual(0.9, 7)) <= 1e-10 * 28);
  for (int m : {2, 10, 100}) {
    HPoly p = beta_coefficients(m);
    for (double x = 1e-3; x < 1.0; x += 1e-2)
      CHECK(std::abs(h_ode_residual(x, p)) <= 1e-10 * 4 * m);
  }
}

TEST_CASE("a perturbed polynomial breaks the ODE residual") {
  HPoly p = beta_coefficients(2);
  p.betas_d[1] += 1e-6;
  CHECK(std::abs(h_ode_residual(0.5, p)) > 1e-8);
}

TEST_CASE("h integral form agrees with the polynomial") {
  HPoly p2 = beta_coefficients(2);
  CHECK(h_integral_form(0.5, p2) == doctest::Approx(4.0).epsilon(1e-9));
  HPoly p5 = beta_coefficients(5);
  CHECK(h_integral_form(0.9, p5) ==
        doctest::Approx(h_eval(0.9, p5)).epsilon(1e-9));
  // stress near the removed endpoint singularity
  CHECK(std::abs(h_integral_form(0.999, p2) - h_eval(0.999, p2)) <=
        1e-7 * h_eval(0.999, p2));
  CHECK_THROWS_AS(h_integral_form(0.0, p2), std::domain_error);
}

TEST_CASE("u endpoint values and hand-checked interior zero") {
  for (int m : {2, 4, 11}) {
    UPoint p0 = u_eval(0.0, m);
    CHECK(std::abs(p0.value) <= 1e-15);
    CHECK(std::abs(p0.derivative) <= 1e-15);
    UPoint p1 = u_eval(1.0, m);
    CHECK(p1.value == doctest::Approx(1.0 / (2.0 * m)).epsilon(1e-15));
    CHECK(p1.derivative ==
          doctest::Approx(2.0 / 3.0 + 1.0 / (3.0 * m)).epsilon(1e-13));
  }
  CHECK(std::abs(u_eval(0.5, 2).value) <= 1e-15);  // x_1 = 0.5 at m = 2
}

TEST_CASE("u satisfies its Riccati-type equation") {
  CHECK(std::abs(u_ode_residual(0.4, 2)) <= 1e-12);
  CHECK(std::abs(u_ode_residual(0.7, 10)) <= 1e-11);
  for (int m : {2, 5, 40}) {
    HPoly p = beta_coefficients(m);
    for (double x = 1e-3; x < 1.0; x += 1e-2)
      CHECK(std::abs(u_ode_residual(x, p)) <= 1e-10);
  }
}

TEST_CASE("u''(0) from central differences") {
  for (int m : {2, 3, 8}) {
    HPoly p = beta_coefficients(m);
    double h = 1e-4;
    double u2 = (u_eval(2 * h, p).value - 2 * u_eval(h, p).value +
                 u_eval(0.0, p).value) /
                (h * h);
    CHECK(u2 == doctest::Approx(-1.0 / (m * (2.0 * m - 3.0))).epsilon(1e-4));
    CHECK(std::abs(u2 + 1.0 / (m * (2.0 * m - 3.0))) <= 1e-6);
  }
}

TEST_CASE("u stays in its Lemma-3 range on a grid") {
  for (int m : {2, 3, 17, 120}) {
    HPoly p = beta_coefficients(m);
    for (double x = 0.0; x <= 1.0 + 1e-12; x += 1e-3) {
      double v = u_eval(std::min(x, 1.0), p).value;
      CHECK(v > -1.0 / (4.0 * m));
      CHECK(v <= 1.0 / (2.0 * m) + 1e-15);
    }
  }
}

TEST_CASE("W values") {
  CHECK(w_eval(kPi / 2.0, 5) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(w_eval(0.0, 7) == 0.0);
  CHECK(w_eval(kPi / 3.0, 3) ==
        doctest::Approx(std::sqrt(3.0) / kPi + 2.0 / 3.0).epsilon(1e-10));
  CHECK_THROWS_AS(w_eval(0.5, 4), std::domain_error);
  CHECK_THROWS_AS(w_eval(-0.1, 3), std::domain_error);
}

TEST_CASE("w_grid matches pointwise adaptive evaluation") {
  std::vector<double> grid = w_grid(7, 1e-2);
  // grid point i sits at i * step (last one at pi/2)
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(grid[50] == doctest::Approx(w_eval(0.5, 7)).epsilon(1e-10));
}

TEST_CASE("F and G certificate functions") {
  CHECK(exp_sq_integral(1.0) ==
        doctest::Approx(1.4626517459071816).epsilon(1e-12));
  CHECK(F_eval(1.0) == doctest::Approx(std::numbers::e).epsilon(1e-12));
  CHECK(F_prime(1.0) ==
        doctest::Approx(2.3042385017484093).epsilon(1e-11));
  CHECK(G_eval(0.0) == 0.0);
  double g3 = G_eval(std::sqrt(3.0));
  CHECK(g3 == doctest::Approx(41.214127134378235).epsilon(1e-10));
  CHECK(g3 < 41.3);
  // F''' >= 0 for mu >= 1
  for (double mu = 1.0; mu <= 1.74; mu += 0.01) CHECK(F_third(mu) >= 0.0);
}

TEST_CASE("distinguished points") {
  DistinguishedPoints p = distinguished_points(2);
  CHECK(p.x_m == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.mu_m == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  for (int m = 2; m <= 1000; ++m) {
    DistinguishedPoints d = distinguished_points(m);
    CHECK(d.mu_m > 1.0);
    CHECK(d.mu_m < std::sqrt(3.0));
  }
  CHECK_THROWS_AS(distinguished_points(1), std::domain_error);
}
