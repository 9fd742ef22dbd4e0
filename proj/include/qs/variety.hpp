#ifndef QS_VARIETY_HPP
#define QS_VARIETY_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qs/geometry.hpp"
#include "qs/poly.hpp"
#include "qs/rng.hpp"
#include "qs/scrollcalc.hpp"

namespace qs {

using json = nlohmann::ordered_json;

enum class ConstructionTag {
  RNC,
  Scroll,
  ScrollDivisor,
  EllipticNormal,
  ProjectedElliptic,
  RationalWithMSecant,
  PlaneQuarticEmbedding,
  PointConfig,
  Projection,
  Line,
};

std::string tag_name(ConstructionTag t);
ConstructionTag tag_from_name(const std::string& name);

// Exact parametric map P^k -> P^r (or a multi-parameter source for scrolls);
// maps share one homogeneity pattern and have no common zero on the source.
struct Parametrization {
  int source_vars = 0;
  std::vector<MultiPoly> maps;
};

// Affine model of a curve: a single defining relation (Weierstrass or a
// quartic solved for its top y-power) plus the coordinate functions of the
// embedding, reduced modulo the relation.
struct ImplicitCurve {
  Relation relation;
  std::vector<MultiPoly> section_basis;
};

// Finite exact point set; params[i], when present, are the source parameters
// the i-th point was sampled at.
struct PointList {
  std::vector<ProjPoint> points;
  std::vector<std::vector<Scalar>> params;
};

// Extra structure for scrolls and their divisors. `form` is the defining
// section G of the divisor in the variables (s, t, u_1..u_{n+1}); it is the
// zero polynomial for a plain scroll.
struct ScrollInfo {
  std::vector<int> type;
  int a = 0;
  long long b = 0;
  MultiPoly form;
};

struct VarietyRep {
  ConstructionTag tag = ConstructionTag::PointConfig;
  int ambient_dim = 0;  // r
  int dim = 0;          // n
  int codim = 0;        // c = r - n
  long long degree = 0;
  std::optional<int> sectional_genus;
  Field field = Field::rationals();  // field of the stored exact data
  std::variant<Parametrization, ImplicitCurve, PointList> rep =
      PointList{};
  std::optional<ScrollInfo> scroll;
  std::uint64_t seed = 0;
  json construction;  // constructor name and parameters, for provenance

  const Parametrization* parametrization() const {
    return std::get_if<Parametrization>(&rep);
  }
  const ImplicitCurve* implicit_curve() const { return std::get_if<ImplicitCurve>(&rep); }
  const PointList* point_list() const { return std::get_if<PointList>(&rep); }
  bool is_scroll_divisor() const {
    return scroll.has_value() && !scroll->form.is_zero();
  }
  std::string describe() const;
};

// ---- constructors -------------------------------------------------------

VarietyRep rational_normal_curve(int r);
VarietyRep scroll(const std::vector<int>& type);
// Draws a defining form of class aH + bF with seeded integer coefficients and
// samples `count` points of its zero scheme.
VarietyRep scroll_divisor_samples(const std::vector<int>& type, int a, long long b, int count,
                                  std::uint64_t seed, std::uint64_t scan_prime = kScanPrime);
VarietyRep elliptic_normal_curve(int c, const Scalar& A, const Scalar& B);
VarietyRep projected_elliptic(int c, std::uint64_t seed, std::uint64_t scan_prime = kScanPrime);
VarietyRep rational_curve_with_4secant(int c, std::uint64_t seed,
                                       std::uint64_t scan_prime = kScanPrime);
VarietyRep plane_quartic_embedding(int c, std::uint64_t seed,
                                   std::uint64_t scan_prime = kScanPrime);
VarietyRep point_config_on_rnc(int c, int m, std::uint64_t seed);
VarietyRep coordinate_line(int r);                    // the line x2 = ... = xr = 0
VarietyRep ambient_points(int r, int count, std::uint64_t seed, const Field& f);

// Projection pi_p from a center certified off the variety. Degree/dim are
// carried over (isomorphic projection); callers re-certify downstream.
VarietyRep project_from_point(const VarietyRep& v, const ProjPoint& center);

// ---- sampling -----------------------------------------------------------

struct SamplePoint {
  ProjPoint point;
  std::vector<Scalar> params;
};

// Field a variety's points are sampled over by default: the data field for
// rational parametrizations, GF(scan prime) where root scanning is required.
Field default_sample_field(const VarietyRep& v, std::uint64_t scan_prime = kScanPrime);

// Draws `count` points (distinct parameter draws; may return fewer only for
// fixed finite point lists). Throws when the representation cannot be sampled
// over the requested field.
std::vector<SamplePoint> sample_points(const VarietyRep& v, int count, const Field& sample_field,
                                       Rng& rng);

// Scroll coordinate maps in the variables (s, t, u_1..u_{n+1}).
std::vector<MultiPoly> scroll_maps(const std::vector<int>& type, const Field& f);

// ---- exact membership ---------------------------------------------------

bool line_contains(const VarietyRep& line, const ProjPoint& p);
// Structural test: recovers (s:t) and fiber coordinates or refutes.
bool scroll_contains(const std::vector<int>& type, const ProjPoint& p,
                     std::vector<Scalar>* params_out = nullptr);
// Membership for the native elliptic monomial basis (exact).
bool elliptic_native_contains(const VarietyRep& v, const ProjPoint& p);
// Divisor of a scroll: recovers scroll parameters, then evaluates the form.
bool scroll_divisor_contains(const VarietyRep& divisor, const ProjPoint& p);

// Exact absence of base points for curve parametrizations (gcd of the
// coordinate forms is trivial).
bool parametrization_base_point_free(const Parametrization& par);

// ---- sections -----------------------------------------------------------

struct SectionAccounting {
  std::vector<SamplePoint> points;  // rational points found
  long long with_multiplicity = 0;  // exact count over the algebraic closure
};

// Exact Bezout accounting of a hyperplane section of a parametrized curve
// over GF(p): rational roots with multiplicity plus the degree of the
// unfactored cofactor (the conjugate points).
SectionAccounting curve_hyperplane_section(const VarietyRep& curve,
                                           std::span<const Scalar> hyperplane, std::uint64_t p);

// Zero-dimensional section of a scroll by dim-many hyperplanes over GF(p),
// with the same exact accounting (fiberwise determinant form).
SectionAccounting scroll_full_section(const VarietyRep& scroll_var,
                                      const std::vector<std::vector<Scalar>>& hyperplanes,
                                      std::uint64_t p);

// Intersection with `codim` seeded random hyperplanes; the result is a point
// configuration over GF(p) (retries with fresh hyperplanes when no rational
// point shows up, then throws).
VarietyRep random_linear_section(const VarietyRep& v, int codim, std::uint64_t seed,
                                 std::uint64_t scan_prime = kScanPrime);

// Points of v lying on all given hyperplanes (partial-codimension sampling
// for section properties; not exhaustive).
std::vector<SamplePoint> sample_section_points(const VarietyRep& v,
                                               const std::vector<std::vector<Scalar>>& hyperplanes,
                                               int count, std::uint64_t p, Rng& rng);

// ---- serialization ------------------------------------------------------

json variety_to_json(const VarietyRep& v);
VarietyRep variety_from_json(const json& j);

}  // namespace qs

#endif
