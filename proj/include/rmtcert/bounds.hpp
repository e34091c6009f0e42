#pragma once

#include <string>
#include <vector>

#include "rmtcert/quadrature.hpp"

namespace rmtcert {

// Bound constants. 1.218 is the rounded Dirichlet-kernel bound and
// 1.827 = (3/2) * 1.218; the sharp value sqrt(3)/pi + 2/3 is used
// internally and reported alongside.
inline constexpr double kWBoundRounded = 1.218;
inline constexpr double kQBoundRounded = 1.827;
inline constexpr double kQLowerRounded = -0.609;  // -(1/2) * 1.218
inline constexpr double kDetLowerBound = 0.0865;
inline constexpr double kLambda1Bound = 0.9135;
inline constexpr double kMapleMargin = 0.0129;
double w_bound_sharp();  // sqrt(3)/pi + 2/3

// Slack constants: quadrature-derived bounds vs exact-arithmetic ones.
inline constexpr double kQuadSlack = 1e-6;
inline constexpr double kExactSlack = 1e-12;

struct SubCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct BoundReport {
  int m = 0;
  double max_mQ = 0.0;  // max over q of m |Q(q)|
  double lambda1_Kprime = 0.0;
  double det_T = 0.0;
  bool lemma2_ok = false;
  bool theorem1_ok = false;
  std::vector<SubCheck> details;
};

// Full certificate for one m: Q-sweep, rank-one bound, entrywise
// comparison, and the direct determinant.
BoundReport verify_theorem1(int m, const QuadratureSpec& spec = {});

// Independent per-m certificates across [m_min, m_max]; `jobs` threads.
std::vector<BoundReport> scan_theorem1(int m_min, int m_max, int jobs = 1,
                                       const QuadratureSpec& spec = {});

struct Lemma3Report {
  int m = 0;
  bool unimodal = false;
  double x0 = 0.0;       // interior minimum
  double u_at_0 = 0.0;
  double u_at_1 = 0.0;
  double min_u = 0.0;
  double max_u = 0.0;
  bool endpoints_ok = false;
  bool range_ok = false;
  bool ok = false;
};

Lemma3Report verify_lemma3(int m, double grid_step = 1e-4);

struct MapleReport {
  std::vector<double> terms;  // u(x_m) + 1/(4m), m = 2..15
  double min_value = 0.0;
  bool pass = false;
};

// min over m in 2..15 of u(x_m) + 1/(4m); must exceed 0.0129.
MapleReport maple_check();

struct FGReport {
  double min_F = 0.0;
  double G_sqrt3 = 0.0;
  double F_at_1 = 0.0;
  double F_prime_1 = 0.0;
  double F_second_1 = 0.0;
  bool third_deriv_ok = false;
  bool pass = false;
  std::vector<SubCheck> details;
};

FGReport verify_fg(const QuadratureSpec& spec = {}, double grid_step = 1e-3);

struct Lemma4Entry {
  int q = 0;
  double min_w = 0.0;
  double max_w = 0.0;
};

struct Lemma4Report {
  std::vector<Lemma4Entry> entries;
  double overall_min = 0.0;
  double overall_max = 0.0;
  double q3_max_refined = 0.0;  // W(pi/3) for q = 3
  bool pass = false;
};

Lemma4Report verify_lemma4(const std::vector<int>& q_list,
                           double grid_step = 1e-3);

struct CriticalPointReport {
  int m = 0;
  double x0 = 0.0;
  double u_second_formula = 0.0;  // from the critical-point identity
  double u_second_fd = 0.0;       // central differences
  double one_minus_x0_sq = 0.0;
  double one_minus_x0_sq_reconstructed = 0.0;
  bool pass = false;
};

// At the interior critical point of u, the identity for u'' and the
// reconstruction of 1 - x0^2 from u(x0) both hold.
CriticalPointReport critical_point_identity(int m);

} // namespace rmtcert
