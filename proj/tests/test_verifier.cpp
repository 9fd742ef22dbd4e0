#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qs/verifier.hpp>

using namespace qs;

TEST_CASE("fundamental inequality scenario on the worked instances") {
  VerifierConfig cfg;
  // twisted cubic: bound C(3,2) - min(0, 2) = 3, a2 = 3
  Scenario s1 = check_fundamental_inequality(rational_normal_curve(3), cfg);
  CHECK(s1.status == Status::Pass);
  CHECK(s1.expected == "a2 <= 3");
  CHECK(s1.observed == "a2 = 3");

  // quintic elliptic: bound C(4,2) - min(1, 3) = 5, a2 = 5
  Field q = Field::rationals();
  Scenario s2 = check_fundamental_inequality(
      elliptic_normal_curve(3, Scalar::of_int(q, -1), Scalar::of_int(q, 0)), cfg);
  CHECK(s2.status == Status::Pass);
  CHECK(s2.expected == "a2 <= 5");

  // degree-7 rational curve with a 4-secant (d = c+3, c = 4):
  // bound C(5,2) - min(2, 4) = 8, attained value 7
  Scenario s3 = check_fundamental_inequality(rational_curve_with_4secant(4, 1), cfg);
  CHECK(s3.status == Status::Pass);
  CHECK(s3.expected == "a2 <= 8");
  CHECK(s3.observed == "a2 = 7");
}

TEST_CASE("single divisor-difference scenarios") {
  VerifierConfig cfg;
  Scenario ok = scenario_divisor_difference({1, 2}, 2, -2, cfg);
  CHECK(ok.status == Status::Pass);
  CHECK(ok.expected == "a2 = 6");
  CHECK(ok.observed == "a2 = 6");

  Scenario degenerate = scenario_divisor_difference({1, 2}, 1, 0, cfg);
  CHECK(degenerate.status == Status::Inconclusive);

  Scenario ineffective = scenario_divisor_difference({1, 1, 1}, 1, -3, cfg);
  CHECK(ineffective.status == Status::Inconclusive);
}

TEST_CASE("gamma scenario and its boundary") {
  VerifierConfig cfg;
  Scenario s = scenario_gamma_on_curve(4, 0, cfg);
  CHECK(s.status == Status::Pass);
  CHECK(s.observed == "a2(Gamma) = 6, a2(D) = 6");

  Scenario boundary = scenario_gamma_on_curve(4, 0, cfg, 8);  // |Gamma| = 2 deg D
  CHECK(boundary.status == Status::Inconclusive);
}

TEST_CASE("small suite runs deterministically and reports") {
  VerifierConfig cfg;
  cfg.castelnuovo_range = {2, 3};
  cfg.jobs = 2;
  VerificationReport r1 = run_suites({"castelnuovo"}, cfg);
  VerificationReport r2 = run_suites({"castelnuovo"}, cfg);
  CHECK(r1.fail == 0);
  CHECK(r1.to_json() == r2.to_json());  // byte-identical reports
  CHECK(r1.to_json().dump() == r2.to_json().dump());

  // 2 curves + 3 scrolls + the inequality summary
  CHECK(r1.scenarios.size() == 6);
  CHECK(r1.scenarios.back().suite == "fundamental-inequality");
  // partial battery: no violations, minimum instance count not enforced
  CHECK(r1.scenarios.back().status == Status::Pass);
  CHECK(r1.exit_code() == 0);

  std::string csv = r1.to_csv();
  CHECK(csv.rfind("scenario,param_string,expected,observed,status,seed,prime\n", 0) == 0);
  std::string text = r1.to_text();
  CHECK(text.find("[Pass] castelnuovo-rnc-c2") != std::string::npos);
}

TEST_CASE("suite names are registered") {
  CHECK(is_suite("castelnuovo"));
  CHECK(is_suite("unique-container"));
  CHECK_FALSE(is_suite("no-such-suite"));
  CHECK(suite_names().size() == 9);
}
