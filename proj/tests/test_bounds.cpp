#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmtcert/bounds.hpp"
#include "rmtcert/report_io.hpp"

using namespace rmtcert;

TEST_CASE("theorem 1 certificate for m=2") {
  BoundReport r = verify_theorem1(2);
  CHECK(r.theorem1_ok);
  CHECK(r.det_T == doctest::Approx(0.84967936855888599).epsilon(1e-9));
  CHECK(r.det_T >= 0.0865);
  CHECK(r.lemma2_ok);
}

TEST_CASE("theorem 1 certificate for m=10") {
  BoundReport r = verify_theorem1(10);
  CHECK(r.theorem1_ok);
  CHECK(r.max_mQ <= 1.827);
  CHECK(1.0 - r.lambda1_Kprime >= 0.0865);
  CHECK(r.det_T >= 1.0 - r.lambda1_Kprime - 1e-9);
}

TEST_CASE("scan results are independent of parallelism") {
  auto serial = scan_theorem1(2, 6, 1);
  auto parallel = scan_theorem1(2, 6, 3);
  REQUIRE(serial.size() == parallel.size());
  CHECK(scan_csv(serial, 7) == scan_csv(parallel, 7));
}

TEST_CASE("lemma 3 certificates") {
  Lemma3Report r2 = verify_lemma3(2);
  CHECK(r2.ok);
  CHECK(r2.unimodal);
  CHECK(r2.x0 > 0.0);
  CHECK(r2.x0 < 0.5);  // the zero crossing x_1 = 0.5 lies right of x_0

  Lemma3Report r7 = verify_lemma3(7);
  CHECK(r7.ok);
  CHECK(std::abs(r7.u_at_1 - 1.0 / 14.0) <= 1e-12);

  Lemma3Report r3 = verify_lemma3(3);
  CHECK(r3.ok);
  CHECK(r3.min_u > -1.0 / 12.0);
}

TEST_CASE("maple check reproduction") {
  MapleReport r = maple_check();
  REQUIRE(r.terms.size() == 14);
  CHECK(r.pass);
  CHECK(r.min_value > 0.0129);
  CHECK(r.min_value == doctest::Approx(0.013499359376679).epsilon(1e-9));
  CHECK(r.terms[0] == doctest::Approx(0.125).epsilon(1e-12));  // m = 2
  for (double term : r.terms) CHECK(term > 0.0);
}

TEST_CASE("F/G certificate") {
  FGReport r = verify_fg();
  CHECK(r.pass);
  CHECK(r.min_F > 2.607);
  CHECK(r.G_sqrt3 < 41.3);
  CHECK(std::abs(r.F_at_1 - std::numbers::e) <= 1e-10);
  CHECK(r.F_prime_1 > 2.304);
  CHECK(r.F_second_1 > -0.415);
  CHECK(r.third_deriv_ok);
}

TEST_CASE("lemma 4 certificate") {
  Lemma4Report r = verify_lemma4({3, 5, 101});
  CHECK(r.pass);
  CHECK(r.overall_min >= -1e-9);
  CHECK(r.overall_max <= 1.2180);
  CHECK(std::abs(r.q3_max_refined - w_bound_sharp()) <= 1e-9);
}

TEST_CASE("critical point identity at the minimum of u") {
  for (int m : {2, 5, 12}) {
    CriticalPointReport r = critical_point_identity(m);
    CHECK(r.pass);
    CHECK(std::abs(r.u_second_formula - r.u_second_fd) <= 1e-5);
    CHECK(std::abs(r.one_minus_x0_sq - r.one_minus_x0_sq_reconstructed) <=
          1e-8);
  }
}

TEST_CASE("report serialization is stable and 17-digit") {
  CHECK(fmt17(0.5) == "0.5");
  CHECK(fmt17(1.0 / 3.0) == "0.33333333333333331");
  BoundReport r = verify_theorem1(2);
  std::string once = bound_report_json(r);
  CHECK(once == bound_report_json(r));
  CHECK(once.find("\"schema\": 1") != std::string::npos);
  CHECK(once.find("\"det_T\"") != std::string::npos);
}
