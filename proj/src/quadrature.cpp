#include "rmtcert/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rmtcert/special_functions.hpp"

namespace rmtcert {
namespace {

constexpr double kPi = std::numbers::pi;

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes by Newton iteration on the Legendre recurrence.
GaussRule make_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[k] = -x;
    rule.nodes[n - 1 - k] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[k] = w;
    rule.weights[n - 1 - k] = w;
  }
  return rule;
}

const GaussRule& low_rule() {
  static const GaussRule r = make_rule(12);
  return r;
}

const GaussRule& high_rule() {
  static const GaussRule r = make_rule(25);
  return r;
}

const GaussRule& panel_rule() {
  static const GaussRule r = make_rule(15);
  return r;
}

double apply_rule(const GaussRule& rule, const std::function<double(double)>& f,
                  double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(c + h * rule.nodes[i]);
  return sum * h;
}

struct Panel {
  double a, b;
  double value;  // high-order estimate
  double error;  // |high - low|
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const {
    return x.error < y.error;
  }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  double lo = apply_rule(low_rule(), f, a, b);
  double hi = apply_rule(high_rule(), f, a, b);
  return Panel{a, b, hi, std::abs(hi - lo)};
}

} // namespace

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
  return apply_rule(panel_rule(), f, a, b);
}

GaussNodes gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order >= 1");
  GaussRule rule = make_rule(order);
  return GaussNodes{std::move(rule.nodes), std::move(rule.weights)};
}

IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec) {
  if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
  if (spec.abs_tol <= 0.0 || spec.rel_tol <= 0.0)
    throw std::invalid_argument("integrate: tolerances must be positive");
  if (a == b) return IntegralResult{0.0, 0.0, 0};

  int initial = 4;
  if (spec.oscillation_hint > 0) {
    // at least one panel per half-period of sin(q s)
    double per = std::ceil((b - a) * spec.oscillation_hint / kPi);
    initial = std::max(initial, static_cast<int>(per) + 1);
  }
  initial = std::min(initial, std::max(1, spec.max_panels));

  std::vector<Panel> heap;
  heap.reserve(2 * initial);
  for (int i = 0; i < initial; ++i) {
    double pa = a + (b - a) * i / initial;
    double pb = a + (b - a) * (i + 1) / initial;
    heap.push_back(eval_panel(f, pa, pb));
  }
  std::make_heap(heap.begin(), heap.end(), PanelWorse{});

  auto totals = [&heap]() {
    double v = 0.0, e = 0.0;
    for (const Panel& p : heap) {
      v += p.value;
      e += p.error;
    }
    return std::pair<double, double>{v, e};
  };

  for (;;) {
    auto [value, error] = totals();
    double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
    if (error <= tol) {
      return IntegralResult{value, error, static_cast<int>(heap.size())};
    }
    if (static_cast<int>(heap.size()) + 1 > spec.max_panels) {
      throw QuadratureError(
          "integrate: panel budget exhausted before tolerance was met",
          IntegralResult{value, error, static_cast<int>(heap.size())});
    }
    std::pop_heap(heap.begin(), heap.end(), PanelWorse{});
    Panel worst = heap.back();
    heap.pop_back();
    double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(eval_panel(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), PanelWorse{});
    heap.push_back(eval_panel(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), PanelWorse{});
  }
}

namespace {

void check_q_range(int q, int m) {
  if (m < 2) throw std::domain_error("I(q): requires m >= 2");
  if (q % 2 == 0) throw std::domain_error("I(q): q must be odd");
  if (q < 3 || q > 4 * m - 5)
    throw std::domain_error("I(q): q outside [3, 4m-5]");
}

} // namespace

double i_of_q(int q, int m, const QuadratureSpec& spec) {
  check_q_range(q, m);
  const HPoly poly = beta_coefficients(m);
  auto f = [q, &poly](double s) {
    if (s < 1e-8) return q / h_eval(std::cos(s), poly);
    return std::sin(q * s) / (std::sin(s) * h_eval(std::cos(s), poly));
  };
  QuadratureSpec qs = spec;
  qs.oscillation_hint = q;
  return (4.0 / kPi) * integrate(f, 0.0, kPi / 2.0, qs).value;
}

double i_of_q_arcsin(int q, int m, const QuadratureSpec& spec) {
  check_q_range(q, m);
  const HPoly poly = beta_coefficients(m);
  // (2/pi) sin(q pi/2) int_{-1}^{1} cos(q arcsin x) / (h(x)(1-x^2)) dx
  // after x = sin t; the integrand limit at |t| -> pi/2 is
  // q sin(q pi/2) / h(1).
  const double sign = (q % 4 == 1) ? 1.0 : -1.0;  // sin(q pi/2), q odd
  auto f = [q, sign, &poly](double t) {
    double c = std::cos(t);
    if (std::abs(c) < 1e-8) return q * sign / h_eval(1.0, poly);
    return std::cos(q * t) / (h_eval(std::sin(t), poly) * c);
  };
  QuadratureSpec qs = spec;
  qs.oscillation_hint = q;
  return (2.0 / kPi) * sign *
         integrate(f, -kPi / 2.0, kPi / 2.0, qs).value;
}

double q_of_q(int q, int m, const QuadratureSpec& spec) {
  return i_of_q(q, m, spec) + 1.0 / (2.0 * m);
}

double q_of_q_via_u(int q, int m, const QuadratureSpec& spec) {
  check_q_range(q, m);
  const HPoly poly = beta_coefficients(m);
  auto f = [q, m, &poly](double s) {
    if (s < 1e-8) return q / (2.0 * m);  // q * u(1), u(1) = 1/(2m)
    return std::sin(q * s) / std::sin(s) * u_eval(std::cos(s), poly).value;
  };
  QuadratureSpec qs = spec;
  qs.oscillation_hint = q;
  return (4.0 / kPi) * integrate(f, 0.0, kPi / 2.0, qs).value;
}

} // namespace rmtcert
