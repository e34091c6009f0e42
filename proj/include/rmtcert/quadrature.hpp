#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmtcert {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_panels = 200000;
  // Frequency q of the dominant sin(q s) factor; sizes the initial
  // panelling at one panel per half-period. 0 = no oscillation.
  int oscillation_hint = 0;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels_used = 0;
};

// Thrown when the panel budget is exhausted before the tolerance is met.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, IntegralResult best)
      : std::runtime_error(what), best_(best) {}
  const IntegralResult& best_estimate() const { return best_; }

 private:
  IntegralResult best_;
};

// Adaptive Gauss-Legendre integration of f over [a, b]. Panels where a
// low- and a high-order rule disagree are bisected first. Callers must
// pre-remove removable singularities from f.
IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec = {});

// Single fixed-order Gauss-Legendre panel; no error estimate. Used for
// cumulative grids where the per-panel width is already small.
double gauss_panel(const std::function<double(double)>& f, double a, double b);

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussNodes {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussNodes gauss_legendre(int order);

// I(q) for odd q in [3, 4m-5], m >= 2, from the trigonometric form
// (4/pi) * int_0^{pi/2} sin(qs) / (sin(s) h(cos s)) ds.
double i_of_q(int q, int m, const QuadratureSpec& spec = {});

// Cross-check path: the arcsin form of I(q), evaluated after the
// substitution x = sin t which removes the endpoint singularity.
double i_of_q_arcsin(int q, int m, const QuadratureSpec& spec = {});

// Q(q) = I(q) + 1/(2m).
double q_of_q(int q, int m, const QuadratureSpec& spec = {});

// Independent path: Q(q) = (4/pi) * int_0^{pi/2} sin(qs)/sin(s) u(cos s) ds.
double q_of_q_via_u(int q, int m, const QuadratureSpec& spec = {});

} // namespace rmtcert
