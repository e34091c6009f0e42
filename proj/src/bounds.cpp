#include "rmtcert/bounds.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "rmtcert/matrices.hpp"
#include "rmtcert/special_functions.hpp"

namespace rmtcert {
namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

double w_bound_sharp() { return std::sqrt(3.0) / kPi + 2.0 / 3.0; }

BoundReport verify_theorem1(int m, const QuadratureSpec& spec) {
  BoundReport report;
  report.m = m;

  MatrixBundle bundle = build_bundle(m, spec);

  double max_abs_mQ = 0.0, max_mQ = -1e300, min_mQ = 1e300;
  for (const auto& [q, value] : bundle.q_values) {
    double mq = m * value;
    max_abs_mQ = std::max(max_abs_mQ, std::abs(mq));
    max_mQ = std::max(max_mQ, mq);
    min_mQ = std::min(min_mQ, mq);
  }
  report.max_mQ = max_abs_mQ;

  RankOneBound rank_one = rank_one_bound(m);
  report.lambda1_Kprime = rank_one.lambda1_Kprime;

  Lemma2Report lemma2 = lemma2_check(bundle.K_mat, kprime_matrix(m));
  report.lemma2_ok = lemma2.ok();

  report.det_T = det_T(bundle);

  auto upper = [&](std::string name, double value, double threshold) {
    report.details.push_back(
        SubCheck{std::move(name), value, threshold, value <= threshold});
  };
  auto lower = [&](std::string name, double value, double threshold) {
    report.details.push_back(
        SubCheck{std::move(name), value, threshold, value >= threshold});
  };
  upper("max_abs_mQ", max_abs_mQ, kQBoundRounded + kQuadSlack);
  upper("max_mQ", max_mQ, kQBoundRounded);
  lower("min_mQ", min_mQ, kQLowerRounded - kQuadSlack);
  upper("lambda1_Kprime", rank_one.lambda1_Kprime,
        kLambda1Bound + kExactSlack);
  report.details.push_back(SubCheck{"lemma2", lemma2.det_I_minus_Kprime, 0.0,
                                    lemma2.ok()});
  lower("det_T", report.det_T, kDetLowerBound - 1e-9);
  // chain consistency: det T >= 1 - lambda1(K')
  lower("chain", report.det_T, 1.0 - rank_one.lambda1_Kprime - 1e-9);

  report.theorem1_ok = true;
  for (const SubCheck& check : report.details)
    report.theorem1_ok = report.theorem1_ok && check.pass;
  return report;
}

std::vector<BoundReport> scan_theorem1(int m_min, int m_max, int jobs,
                                       const QuadratureSpec& spec) {
  if (m_min < 2 || m_max < m_min)
    throw std::domain_error("scan_theorem1: bad m range");
  std::vector<BoundReport> reports(m_max - m_min + 1);
  std::atomic<int> next{m_min};
  auto worker = [&]() {
    for (;;) {
      int m = next.fetch_add(1);
      if (m > m_max) return;
      reports[m - m_min] = verify_theorem1(m, spec);
    }
  };
  int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads - 1; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return reports;
}

namespace {

// Sign scan of u' with three-point run confirmation: runs shorter than
// three samples are treated as isolated floating-point flips.
struct SignScan {
  bool unimodal = false;
  double last_negative = 0.0;
  double first_positive = 0.0;
};

SignScan scan_u_derivative(const HPoly& poly, double grid_step) {
  // u'(0) = 0 exactly, so the scan starts at the first interior point
  struct Run {
    int sign;
    int count;
    double first_x, last_x;
  };
  std::vector<Run> runs;
  for (double x = grid_step; x < 1.0 + grid_step / 2; x += grid_step) {
    double xc = std::min(x, 1.0);
    double d = u_eval(xc, poly).derivative;
    if (std::abs(d) < 1e-13) continue;  // treated as zero near the minimum
    int s = d > 0 ? 1 : -1;
    if (!runs.empty() && runs.back().sign == s) {
      runs.back().count++;
      runs.back().last_x = xc;
    } else {
      runs.push_back(Run{s, 1, xc, xc});
    }
  }
  std::vector<Run> confirmed;
  for (const Run& r : runs) {
    if (r.count < 3) continue;
    if (!confirmed.empty() && confirmed.back().sign == r.sign) {
      confirmed.back().count += r.count;
      confirmed.back().last_x = r.last_x;
    } else {
      confirmed.push_back(r);
    }
  }
  SignScan result;
  result.unimodal = confirmed.size() == 2 && confirmed[0].sign == -1 &&
                    confirmed[1].sign == 1;
  if (result.unimodal) {
    result.last_negative = confirmed[0].last_x;
    result.first_positive = confirmed[1].first_x;
  }
  return result;
}

double locate_minimum(const HPoly& poly, double lo, double hi) {
  // bisection on u'; u'' is non-zero at the minimum
  double flo = u_eval(lo, poly).derivative;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    double fm = u_eval(mid, poly).derivative;
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15) break;
  }
  return 0.5 * (lo + hi);
}

} // namespace

Lemma3Report verify_lemma3(int m, double grid_step) {
  const HPoly poly = beta_coefficients(m);
  Lemma3Report report;
  report.m = m;

  report.u_at_0 = u_eval(0.0, poly).value;
  report.u_at_1 = u_eval(1.0, poly).value;
  report.endpoints_ok = std::abs(report.u_at_0) <= 1e-12 &&
                        std::abs(report.u_at_1 - 1.0 / (2.0 * m)) <= 1e-12;

  report.min_u = 0.0;
  report.max_u = 0.0;
  for (double x = 0.0; x < 1.0 + grid_step / 2; x += grid_step) {
    double v = u_eval(std::min(x, 1.0), poly).value;
    report.min_u = std::min(report.min_u, v);
    report.max_u = std::max(report.max_u, v);
  }
  report.range_ok = report.min_u > -1.0 / (4.0 * m) &&
                    report.max_u <= 1.0 / (2.0 * m) + 1e-12;

  SignScan scan = scan_u_derivative(poly, grid_step);
  report.unimodal = scan.unimodal;
  if (scan.unimodal)
    report.x0 = locate_minimum(poly, scan.last_negative, scan.first_positive);

  report.ok = report.unimodal && report.endpoints_ok && report.range_ok;
  return report;
}

MapleReport maple_check() {
  MapleReport report;
  report.min_value = 1e300;
  for (int m = 2; m <= 15; ++m) {
    const HPoly poly = beta_coefficients(m);
    DistinguishedPoints pts = distinguished_points(m);
    double term = u_eval(pts.x_m, poly).value + 1.0 / (4.0 * m);
    report.terms.push_back(term);
    report.min_value = std::min(report.min_value, term);
  }
  report.pass = report.min_value > kMapleMargin;
  return report;
}

FGReport verify_fg(const QuadratureSpec& spec, double grid_step) {
  FGReport report;
  const double sqrt3 = std::sqrt(3.0);

  report.G_sqrt3 = G_eval(sqrt3, spec);
  report.F_at_1 = F_eval(1.0, spec);
  report.F_prime_1 = F_prime(1.0, spec);
  report.F_second_1 = F_second(1.0, spec);

  report.min_F = 1e300;
  bool ratio_ok = true;
  bool third_ok = true;
  for (double mu = 1.0; mu < sqrt3 + grid_step / 2; mu += grid_step) {
    double muc = std::min(mu, sqrt3);
    double f = F_eval(muc, spec);
    report.min_F = std::min(report.min_F, f);
    ratio_ok = ratio_ok && f >= report.G_sqrt3 / 16.0;
    third_ok = third_ok && F_third(muc) >= 0.0;
  }
  // finite-difference confirmation of F''' >= 0 on a coarser grid
  const double h = 1e-4;
  for (double mu = 1.0; mu <= sqrt3; mu += 0.01) {
    double fd3 = (F_second(mu + h, spec) - F_second(mu - h, spec)) / (2 * h);
    third_ok = third_ok && fd3 >= -1e-6;
  }
  report.third_deriv_ok = third_ok;

  auto add = [&](std::string name, double value, double threshold,
                 bool pass) {
    report.details.push_back(
        SubCheck{std::move(name), value, threshold, pass});
  };
  add("min_F", report.min_F, 2.607, report.min_F > 2.607);
  add("G_sqrt3", report.G_sqrt3, 41.3, report.G_sqrt3 < 41.3);
  add("F_at_1", report.F_at_1, std::numbers::e,
      std::abs(report.F_at_1 - std::numbers::e) <= 1e-10);
  add("F_prime_1", report.F_prime_1, 2.304, report.F_prime_1 > 2.304);
  add("F_second_1", report.F_second_1, -0.415, report.F_second_1 > -0.415);
  add("F_ge_G_over_16", report.min_F, report.G_sqrt3 / 16.0, ratio_ok);
  add("F_third_nonneg", 0.0, 0.0, third_ok);

  report.pass = true;
  for (const SubCheck& check : report.details)
    report.pass = report.pass && check.pass;
  return report;
}

Lemma4Report verify_lemma4(const std::vector<int>& q_list, double grid_step) {
  Lemma4Report report;
  report.overall_min = 1e300;
  report.overall_max = -1e300;
  for (int q : q_list) {
    std::vector<double> values = w_grid(q, grid_step);
    Lemma4Entry entry;
    entry.q = q;
    entry.min_w = 1e300;
    entry.max_w = -1e300;
    for (double v : values) {
      entry.min_w = std::min(entry.min_w, v);
      entry.max_w = std::max(entry.max_w, v);
    }
    report.overall_min = std::min(report.overall_min, entry.min_w);
    report.overall_max = std::max(report.overall_max, entry.max_w);
    report.entries.push_back(entry);
  }
  bool q3_ok = true;
  for (int q : q_list) {
    if (q == 3) {
      // the maximum sits at the first Dirichlet-kernel zero pi/3
      report.q3_max_refined = w_eval(kPi / 3.0, 3);
      q3_ok = std::abs(report.q3_max_refined - w_bound_sharp()) <= 1e-9;
    }
  }
  report.pass = report.overall_min >= -1e-9 &&
                report.overall_max <= 1.2180 && q3_ok;
  return report;
}

CriticalPointReport critical_point_identity(int m) {
  CriticalPointReport report;
  report.m = m;
  const HPoly poly = beta_coefficients(m);

  Lemma3Report lemma3 = verify_lemma3(m);
  report.x0 = lemma3.x0;
  const double x0 = report.x0;
  const double u0 = u_eval(x0, poly).value;

  const double num = 4.0 * m * (m + 1) * u0 - 1.0;
  report.u_second_formula =
      num * num / (m * (1.0 - 2.0 * m * u0) * (1.0 - 4.0 * m * u0));

  const double h = 1e-4;
  report.u_second_fd = (u_eval(x0 + h, poly).value - 2.0 * u0 +
                        u_eval(x0 - h, poly).value) /
                       (h * h);

  report.one_minus_x0_sq = 1.0 - x0 * x0;
  report.one_minus_x0_sq_reconstructed =
      -(1.0 - 2.0 * m * u0) * (1.0 - 4.0 * m * u0) / num;

  report.pass =
      lemma3.unimodal &&
      std::abs(report.u_second_formula - report.u_second_fd) <= 1e-5 &&
      std::abs(report.one_minus_x0_sq -
               report.one_minus_x0_sq_reconstructed) <= 1e-8;
  return report;
}

} // namespace rmtcert
