#pragma once

#include <vector>

#include "rmtcert/exact.hpp"
#include "rmtcert/quadrature.hpp"

namespace rmtcert {

// Even polynomial h(x) = sum_k beta_k x^{2k} of degree 2(m-1), with
// exact rational coefficients and a double image for evaluation.
struct HPoly {
  int m = 0;
  std::vector<BigRat> betas;
  std::vector<double> betas_d;
};

// Coefficients via the telescoping product, kept as exact rationals and
// converted to floating point once. Requires m >= 2.
HPoly beta_coefficients(int m);

double h_eval(double x, const HPoly& poly);     // Horner in x^2
double h_prime(double x, const HPoly& poly);    // dh/dx

// x(x^2-1)h' + (2m-1-2(m-1)x^2)h - 4m; identically zero for exact h.
double h_ode_residual(double x, const HPoly& poly);
double h_ode_residual(double x, int m);

// h from its integral representation
// h(x) = 4m x^{2m-1}/sqrt(1-x^2) * int_x^1 t^{-2m}/sqrt(1-t^2) dt,
// with t = cos(theta) removing the endpoint singularity. 0 < x < 1.
double h_integral_form(double x, const HPoly& poly,
                       const QuadratureSpec& spec = {});

struct UPoint {
  double x = 0.0;
  double value = 0.0;
  double derivative = 0.0;
};

// u(x) = 1/h(x) - (1-x^2)/2 + 1/(4m); derivative analytic: -h'/h^2 + x.
UPoint u_eval(double x, const HPoly& poly);
UPoint u_eval(double x, int m);

// x(1-x^2)u' - 4mu^2 + (2(m+1)x^2 + 1-2m)u - x^2/(2m).
double u_ode_residual(double x, const HPoly& poly);
double u_ode_residual(double x, int m);

// W(x) = (2/pi) int_0^x sin(qs)/sin(s) ds, q odd >= 3, 0 <= x <= pi/2.
double w_eval(double x, int q, const QuadratureSpec& spec = {});

// Cumulative W on the grid {0, step, 2*step, ..., pi/2}; returns the
// value at every grid point (final point is pi/2 exactly).
std::vector<double> w_grid(int q, double step);

// int_0^mu e^{lambda^2} d lambda.
double exp_sq_integral(double mu, const QuadratureSpec& spec = {});

// F(mu) = mu e^{mu^2} + 2(1-mu^2) int_0^mu e^{lambda^2} d lambda and its
// analytic derivatives; G(mu) = (mu^2/2)(mu e^{mu^2} - int_0^mu e^{lambda^2}).
double F_eval(double mu, const QuadratureSpec& spec = {});
double F_prime(double mu, const QuadratureSpec& spec = {});
double F_second(double mu, const QuadratureSpec& spec = {});
double F_third(double mu);
double G_eval(double mu, const QuadratureSpec& spec = {});

struct DistinguishedPoints {
  double x_m = 0.0;   // sqrt((m-1)/(m+2))
  double mu_m = 0.0;  // sqrt(2m(1 - x_m)), lies in (1, sqrt(3))
};

DistinguishedPoints distinguished_points(int m);

} // namespace rmtcert
