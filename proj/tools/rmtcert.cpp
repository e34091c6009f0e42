#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmtcert/bounds.hpp"
#include "rmtcert/loggas.hpp"
#include "rmtcert/report_io.hpp"

namespace {

using namespace rmtcert;

// exit codes: 0 pass, 1 certificate failure, 2 numerical
// non-convergence, 3 invalid configuration
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitNonConvergence = 2;
constexpr int kExitBadConfig = 3;

// --out wins; otherwise RMTCERT_OUT_DIR/<default name>; otherwise stdout.
void emit(const std::string& out_path, const std::string& default_name,
          const std::string& content) {
  std::string path = out_path;
  if (path.empty()) {
    if (const char* dir = std::getenv("RMTCERT_OUT_DIR"))
      path = std::string(dir) + "/" + default_name;
  }
  if (path.empty()) {
    std::cout << content;
  } else {
    atomic_write(path, content);
    std::cerr << "report written to " << path << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rmtcert: numerical certificates for the determinant lower bound\n"
      "det T >= 0.0865 and its supporting inequalities, plus desk-scale\n"
      "log-gas partition-function studies."};
  app.require_subcommand(1);

  double abs_tol = 1e-12, rel_tol = 1e-12;
  std::string out_path, format = "json";

  auto add_common = [&](CLI::App* cmd, const std::string& default_format) {
    cmd->add_option("--abs-tol", abs_tol, "absolute quadrature tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rel-tol", rel_tol, "relative quadrature tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path,
                    "output file (default: $RMTCERT_OUT_DIR or stdout)");
    format = default_format;
  };

  int m = 2;
  auto* verify = app.add_subcommand(
      "verify", "full certificate for one m (JSON report)");
  verify->add_option("--m", m, "matrix parameter m >= 2")
      ->required()
      ->check(CLI::Range(2, 100000));
  add_common(verify, "json");

  int m_min = 2, m_max = 50, jobs = 1;
  std::uint64_t seed = 0;
  auto* scan = app.add_subcommand(
      "scan",
      "certificates for every m in a range; CSV columns: "
      "m,max_mQ,lambda1_Kprime,det_T,lemma2_ok,theorem1_ok");
  scan->add_option("--m-min", m_min)->check(CLI::Range(2, 100000));
  scan->add_option("--m-max", m_max)->check(CLI::Range(2, 100000));
  scan->add_option("--jobs", jobs, "worker threads (not recorded in reports)")
      ->check(CLI::PositiveNumber);
  scan->add_option("--seed", seed, "seed echoed into the report header");
  scan->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_common(scan, "csv");

  double grid_step = 1e-4;
  auto* lemma3 = app.add_subcommand(
      "lemma3", "unimodality and range certificate for u (JSON report)");
  lemma3->add_option("--m", m)->required()->check(CLI::Range(2, 100000));
  lemma3->add_option("--grid-step", grid_step)->check(CLI::PositiveNumber);
  add_common(lemma3, "json");

  int q_min = 3, q_max = 201;
  double w_grid_step = 1e-3;
  auto* lemma4 = app.add_subcommand(
      "lemma4", "Dirichlet-kernel primitive bounds 0 <= W <= 1.218");
  lemma4->add_option("--q-min", q_min)->check(CLI::Range(3, 100001));
  lemma4->add_option("--q-max", q_max)->check(CLI::Range(3, 100001));
  lemma4->add_option("--grid-step", w_grid_step)->check(CLI::PositiveNumber);
  add_common(lemma4, "json");

  double fg_step = 1e-3;
  auto* fg = app.add_subcommand(
      "fg", "F/G certificate on [1, sqrt(3)] (JSON report)");
  fg->add_option("--grid-step", fg_step)->check(CLI::PositiveNumber);
  add_common(fg, "json");

  auto* maple = app.add_subcommand(
      "maple", "min over m in 2..15 of u(x_m) + 1/(4m), against 0.0129");
  add_common(maple, "json");

  int lg_m = 2;
  std::vector<int> n_list{2, 4, 6};
  long mc_samples = 400000;
  std::uint64_t lg_seed = 12345;
  int lg_jobs = 1;
  auto* loggas = app.add_subcommand(
      "loggas",
      "finite-N partition-function ratio study; CSV columns: "
      "N,beta,k,method,value_log,error,seed");
  loggas->add_option("--m", lg_m)->check(CLI::Range(2, 20));
  loggas->add_option("--n-list", n_list, "even ensemble sizes")
      ->delimiter(',');
  loggas->add_option("--samples", mc_samples, "Monte Carlo samples per Z")
      ->check(CLI::PositiveNumber);
  loggas->add_option("--seed", lg_seed, "master Monte Carlo seed");
  loggas->add_option("--jobs", lg_jobs)->check(CLI::PositiveNumber);
  add_common(loggas, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitBadConfig;
  }

  QuadratureSpec spec;
  spec.abs_tol = abs_tol;
  spec.rel_tol = rel_tol;

  try {
    if (app.got_subcommand(verify)) {
      BoundReport report = verify_theorem1(m, spec);
      emit(out_path, "verify_m" + std::to_string(m) + ".json",
           bound_report_json(report));
      return report.theorem1_ok ? kExitPass : kExitFail;
    }
    if (app.got_subcommand(scan)) {
      if (m_max < m_min) {
        std::cerr << "scan: --m-max must be >= --m-min\n";
        return kExitBadConfig;
      }
      auto reports = scan_theorem1(m_min, m_max, jobs, spec);
      emit(out_path, "scan." + format,
           format == "csv" ? scan_csv(reports, seed)
                           : scan_json(reports, seed));
      for (const BoundReport& r : reports)
        if (!r.theorem1_ok) return kExitFail;
      return kExitPass;
    }
    if (app.got_subcommand(lemma3)) {
      Lemma3Report report = verify_lemma3(m, grid_step);
      emit(out_path, "lemma3_m" + std::to_string(m) + ".json",
           lemma3_json(report));
      return report.ok ? kExitPass : kExitFail;
    }
    if (app.got_subcommand(lemma4)) {
      std::vector<int> q_list;
      for (int q = q_min % 2 == 0 ? q_min + 1 : q_min; q <= q_max; q += 2)
        q_list.push_back(q);
      Lemma4Report report = verify_lemma4(q_list, w_grid_step);
      emit(out_path, "lemma4.json", lemma4_json(report));
      return report.pass ? kExitPass : kExitFail;
    }
    if (app.got_subcommand(fg)) {
      FGReport report = verify_fg(spec, fg_step);
      emit(out_path, "fg.json", fg_json(report));
      return report.pass ? kExitPass : kExitFail;
    }
    if (app.got_subcommand(maple)) {
      MapleReport report = maple_check();
      std::cout << "min over m in 2..15 of u(x_m) + 1/(4m) = "
                << fmt17(report.min_value) << " (threshold "
                << fmt17(kMapleMargin) << "): "
                << (report.pass ? "PASS" : "FAIL") << "\n";
      if (!out_path.empty() || std::getenv("RMTCERT_OUT_DIR"))
        emit(out_path, "maple.json", maple_json(report));
      return report.pass ? kExitPass : kExitFail;
    }
    if (app.got_subcommand(loggas)) {
      LogGasSpec lg_spec;
      lg_spec.mc_samples = mc_samples;
      lg_spec.seed = lg_seed;
      lg_spec.jobs = lg_jobs;
      Potential V = Potential::monomial(lg_m);
      std::vector<RatioEstimate> estimates;
      bool ok = true;
      for (int N : n_list) {
        RatioEstimate est = universality_ratio(lg_m, N, V, lg_spec);
        std::cout << "N=" << N << " ratio=" << fmt17(est.ratio)
                  << " +/- " << fmt17(est.error)
                  << (est.inconclusive ? " (inconclusive)" : "") << "\n";
        ok = ok && !est.inconclusive && std::isfinite(est.ratio) &&
             est.ratio > 0.0;
        estimates.push_back(est);
      }
      emit(out_path, "loggas.csv", loggas_csv(estimates, lg_seed));
      return ok ? kExitPass : kExitFail;
    }
  } catch (const QuadratureError& e) {
    std::cerr << "numerical non-convergence: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  }
  return kExitBadConfig;
}
