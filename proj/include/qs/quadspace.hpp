#ifndef QS_QUADSPACE_HPP
#define QS_QUADSPACE_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qs/variety.hpp"

namespace qs {

enum class Certification { SymbolicCertified, MultiPrimeAgreed, SampledOnly };
std::string certification_name(Certification c);
// SymbolicCertified > MultiPrimeAgreed > SampledOnly
bool certification_at_least(Certification have, Certification want);

struct Provenance {
  std::uint64_t seed = 0;
  std::string sampling_field;
  std::vector<std::uint64_t> primes;            // sampling primes used
  std::vector<std::uint64_t> crosscheck_primes; // modular rank rechecks (QQ pipelines)
  int samples = 0;
  int disagreements = 0;
};

// Certified basis of the quadrics through a variety.
struct QuadricBasis {
  int ambient_dim = 0;
  int variety_dim = 0;
  std::vector<MultiPoly> quadrics;
  int a2 = 0;
  Certification certification = Certification::SampledOnly;
  Provenance provenance;

  json to_json(bool include_quadrics = true) const;
};

struct SamplingPolicy {
  std::optional<Field> field;  // sampling field; per-representation default otherwise
  int initial_extra = 10;      // first batch = C(r+2,2) + initial_extra
  int increment = 25;
  int max_points = 4000;
  int retries = 4;
  bool crosscheck = true;  // second sampling prime / modular rank recheck
  std::uint64_t scan_prime = kScanPrime;
  std::uint64_t scan_prime_alt = kScanPrimeAlt;
  std::uint64_t rank_prime = kRankPrime;
  std::uint64_t rank_prime_alt = kRankPrimeAlt;
  std::uint64_t seed = 0;
};

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rows = points, columns = monomials_of_degree(r+1, degree) in grlex order.
ExactMatrix evaluation_matrix(std::span<const ProjPoint> points, int degree);

// Kernel vector -> quadric in the fixed monomial order.
MultiPoly quadric_from_kernel_vector(std::span<const Scalar> v, int ambient_dim);

// True when the quadric vanishes identically on the variety, decided
// symbolically (parametrization pullback, reduction modulo the curve
// relation, or divisibility by the divisor form).
bool certify_quadric_on(const VarietyRep& v, const MultiPoly& quadric);

// Samples in batches until the kernel dimension is stable across two
// consecutive rounds, then certifies every kernel vector symbolically.
// Prime-field pipelines are re-run at a second prime when crosscheck is on;
// rational pipelines re-check the rank modulo two large primes.
QuadricBasis quadric_basis(const VarietyRep& v, const SamplingPolicy& pol);

// True iff every quadric of the basis pulls back to zero on the candidate.
bool contains_in_baselocus(const QuadricBasis& basis, const VarietyRep& candidate);

struct ExcludedWitness {
  ProjPoint point;
  int quadric_index;  // a quadric that does not vanish at the point
};

struct BaseLocusReport {
  // components certified inside the base locus, with the proof kind
  std::vector<std::pair<std::string, std::string>> certified_components;
  std::vector<ExcludedWitness> excluded;
  std::vector<ProjPoint> counterexample_candidates;  // survivors killing no quadric
  int discarded_on_components = 0;
  int probes = 0;
  bool clean() const { return counterexample_candidates.empty(); }
};

// Samples the superset, discards points on known components (exact membership
// where the structure allows it, certified quadric evidence otherwise) and
// records a nonvanishing quadric for every survivor. Evidence, not proof.
BaseLocusReport exclusion_witnesses(const QuadricBasis& basis, const VarietyRep& superset,
                                    std::span<const VarietyRep> known, int trials,
                                    std::uint64_t seed);

}  // namespace qs

#endif
