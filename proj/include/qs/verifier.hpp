#ifndef QS_VERIFIER_HPP
#define QS_VERIFIER_HPP

#include <string>
#include <vector>

#include "qs/quadspace.hpp"

namespace qs {

enum class Status { Pass, Fail, Inconclusive };
std::string status_name(Status s);

// One named, reproducible check with full provenance.
struct Scenario {
  std::string suite;
  std::string name;
  json params = json::object();
  std::string expected;
  std::string observed;
  Status status = Status::Inconclusive;
  Certification certification = Certification::SampledOnly;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;  // sampling prime (0 for purely rational runs)
  std::string notes;

  // varieties this scenario constructed, for the global inequality sweep
  struct Instance {
    std::string desc;
    long long degree = 0;
    int codim = 0;
    long long a2 = 0;
  };
  std::vector<Instance> instances;

  json to_json() const;
};

struct VerifierConfig {
  std::uint64_t seed = 0;
  std::uint64_t scan_prime = kScanPrime;
  std::uint64_t scan_prime_alt = kScanPrimeAlt;
  std::uint64_t rank_prime = kRankPrime;
  std::uint64_t rank_prime_alt = kRankPrimeAlt;
  int jobs = 0;  // 0: one worker per scenario
  int probe_trials = 220;
  int retries = 4;
  std::vector<int> castelnuovo_range = {2, 3, 4, 5, 6};
  std::vector<int> fano_range = {3, 4, 5};
  std::vector<int> theorem13_range = {4, 5};
  std::vector<int> twonormality_range = {3, 4, 5};
  std::vector<int> gamma_range = {4, 5};
  std::vector<std::vector<int>> divisor_types = {{1, 2}, {1, 1, 1}};

  SamplingPolicy policy() const;
};

struct VerificationReport {
  json environment;
  std::vector<Scenario> scenarios;
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;

  json to_json() const;
  std::string to_csv() const;   // scenario,param_string,expected,observed,status,seed,prime
  std::string to_text() const;
  // 0: all pass; 1: some failure; 3: inconclusive only
  int exit_code() const;
};

// Registered suite names, in execution order.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs the named suites (scenario-level parallelism per cfg.jobs) and appends
// the global fundamental-inequality summary over every constructed instance.
VerificationReport run_suites(const std::vector<std::string>& names, const VerifierConfig& cfg);

// ---- single-scenario entry points ----

// eq. (1.1)-style bound check on one constructed variety.
Scenario check_fundamental_inequality(const VarietyRep& v, const VerifierConfig& cfg);

// sampled a2 of a random divisor in the class vs the closed-form prediction.
Scenario scenario_divisor_difference(const std::vector<int>& type, int a, long long b,
                                     const VerifierConfig& cfg);

// a2 of a big point group on a curve of degree c+k equals a2 of the curve.
// gamma_size < 0 picks the smallest admissible size 2*deg(D) + 1.
Scenario scenario_gamma_on_curve(int c, int k, const VerifierConfig& cfg, int gamma_size = -1);

}  // namespace qs

#endif
