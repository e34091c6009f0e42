#include "rmtcert/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmtcert {
namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

HPoly beta_coefficients(int m) {
  if (m < 2) throw std::domain_error("beta_coefficients: requires m >= 2");
  HPoly poly;
  poly.m = m;
  poly.betas.reserve(m);
  poly.betas_d.reserve(m);
  // beta_0 = 2 * 2m/(2m-1); each step appends the factor (2m-2k)/(2m-2k-1)
  BigRat running(BigInt(4 * m), BigInt(2 * m - 1));
  poly.betas.push_back(running);
  for (int k = 1; k < m; ++k) {
    running *= BigRat(BigInt(2 * m - 2 * k), BigInt(2 * m - 2 * k - 1));
    poly.betas.push_back(running);
  }
  for (const BigRat& b : poly.betas) poly.betas_d.push_back(to_double(b));
  return poly;
}

double h_eval(double x, const HPoly& poly) {
  const double x2 = x * x;
  double acc = 0.0;
  for (auto it = poly.betas_d.rbegin(); it != poly.betas_d.rend(); ++it)
    acc = acc * x2 + *it;
  return acc;
}

double h_prime(double x, const HPoly& poly) {
  const double x2 = x * x;
  double acc = 0.0;
  for (int k = static_cast<int>(poly.betas_d.size()) - 1; k >= 1; --k)
    acc = acc * x2 + 2 * k * poly.betas_d[k];
  return acc * x;
}

double h_ode_residual(double x, const HPoly& poly) {
  const int m = poly.m;
  const double h = h_eval(x, poly);
  const double hp = h_prime(x, poly);
  return x * (x * x - 1.0) * hp + (2 * m - 1 - 2.0 * (m - 1) * x * x) * h -
         4.0 * m;
}

double h_ode_residual(double x, int m) {
  return h_ode_residual(x, beta_coefficients(m));
}

double h_integral_form(double x, const HPoly& poly,
                       const QuadratureSpec& spec) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("h_integral_form: requires 0 < x < 1");
  const int m = poly.m;
  // int_x^1 t^{-2m}/sqrt(1-t^2) dt = int_0^{arccos x} cos(theta)^{-2m} dtheta
  const double theta_max = std::acos(x);
  auto f = [m](double theta) {
    return std::pow(std::cos(theta), -2.0 * m);
  };
  IntegralResult inner = integrate(f, 0.0, theta_max, spec);
  return 4.0 * m * std::pow(x, 2 * m - 1) / std::sqrt(1.0 - x * x) *
         inner.value;
}

UPoint u_eval(double x, const HPoly& poly) {
  const double h = h_eval(x, poly);
  const double hp = h_prime(x, poly);
  UPoint p;
  p.x = x;
  p.value = 1.0 / h - (1.0 - x * x) / 2.0 + 1.0 / (4.0 * poly.m);
  p.derivative = -hp / (h * h) + x;
  return p;
}

UPoint u_eval(double x, int m) { return u_eval(x, beta_coefficients(m)); }

double u_ode_residual(double x, const HPoly& poly) {
  const int m = poly.m;
  const UPoint p = u_eval(x, poly);
  return x * (1.0 - x * x) * p.derivative - 4.0 * m * p.value * p.value +
         (2.0 * (m + 1) * x * x + 1.0 - 2.0 * m) * p.value -
         x * x / (2.0 * m);
}

double u_ode_residual(double x, int m) {
  return u_ode_residual(x, beta_coefficients(m));
}

namespace {

void check_w_args(double x, int q) {
  if (q < 3 || q % 2 == 0)
    throw std::domain_error("W(x): q must be odd and >= 3");
  if (x < 0.0 || x > kPi / 2.0 + 1e-12)
    throw std::domain_error("W(x): requires 0 <= x <= pi/2");
}

double dirichlet_kernel(double s, int q) {
  if (s < 1e-8) return static_cast<double>(q);  // removable singularity
  return std::sin(q * s) / std::sin(s);
}

} // namespace

double w_eval(double x, int q, const QuadratureSpec& spec) {
  check_w_args(x, q);
  if (x == 0.0) return 0.0;
  QuadratureSpec qs = spec;
  qs.oscillation_hint = q;
  auto f = [q](double s) { return dirichlet_kernel(s, q); };
  return (2.0 / kPi) * integrate(f, 0.0, x, qs).value;
}

std::vector<double> w_grid(int q, double step) {
  check_w_args(0.0, q);
  if (step <= 0.0) throw std::invalid_argument("w_grid: step must be > 0");
  auto f = [q](double s) { return dirichlet_kernel(s, q); };
  std::vector<double> values;
  values.push_back(0.0);
  double acc = 0.0;
  double x = 0.0;
  while (x < kPi / 2.0) {
    double next = std::min(x + step, kPi / 2.0);
    // keep each Gauss panel well inside a half-period of sin(q s)
    int sub = static_cast<int>(std::ceil((next - x) * q / kPi)) + 1;
    for (int j = 0; j < sub; ++j) {
      double a = x + (next - x) * j / sub;
      double b = x + (next - x) * (j + 1) / sub;
      acc += gauss_panel(f, a, b);
    }
    values.push_back((2.0 / kPi) * acc);
    x = next;
  }
  return values;
}

double exp_sq_integral(double mu, const QuadratureSpec& spec) {
  if (mu < 0.0) throw std::domain_error("exp_sq_integral: requires mu >= 0");
  if (mu == 0.0) return 0.0;
  return integrate([](double l) { return std::exp(l * l); }, 0.0, mu, spec)
      .value;
}

double F_eval(double mu, const QuadratureSpec& spec) {
  return mu * std::exp(mu * mu) +
         2.0 * (1.0 - mu * mu) * exp_sq_integral(mu, spec);
}

double F_prime(double mu, const QuadratureSpec& spec) {
  return 3.0 * std::exp(mu * mu) - 4.0 * mu * exp_sq_integral(mu, spec);
}

double F_second(double mu, const QuadratureSpec& spec) {
  return 2.0 * mu * std::exp(mu * mu) - 4.0 * exp_sq_integral(mu, spec);
}

double F_third(double mu) {
  return (4.0 * mu * mu - 2.0) * std::exp(mu * mu);
}

double G_eval(double mu, const QuadratureSpec& spec) {
  return 0.5 * mu * mu *
         (mu * std::exp(mu * mu) - exp_sq_integral(mu, spec));
}

DistinguishedPoints distinguished_points(int m) {
  if (m < 2) throw std::domain_error("distinguished_points: requires m >= 2");
  DistinguishedPoints p;
  p.x_m = std::sqrt(static_cast<double>(m - 1) / (m + 2));
  p.mu_m = std::sqrt(2.0 * m * (1.0 - p.x_m));
  return p;
}

} // namespace rmtcert
