#include "qs/quadspace.hpp"

#include <algorithm>

namespace qs {

std::string certification_name(Certification c) {
  switch (c) {
    case Certification::SymbolicCertified: return "SymbolicCertified";
    case Certification::MultiPrimeAgreed: return "MultiPrimeAgreed";
    case Certification::SampledOnly: return "SampledOnly";
  }
  throw std::logic_error("unknown certification level");
}

bool certification_at_least(Certification have, Certification want) {
  auto level = [](Certification c) {
    switch (c) {
      case Certification::SymbolicCertified: return 2;
      case Certification::MultiPrimeAgreed: return 1;
      case Certification::SampledOnly: return 0;
    }
    return 0;
  };
  return level(have) >= level(want);
}

json QuadricBasis::to_json(bool include_quadrics) const {
  json j;
  j["ambientDim"] = ambient_dim;
  j["a2"] = a2;
  j["certification"] = certification_name(certification);
  json prov;
  prov["seed"] = std::to_string(provenance.seed);
  prov["samplingField"] = provenance.sampling_field;
  prov["primes"] = provenance.primes;
  prov["crosscheckPrimes"] = provenance.crosscheck_primes;
  prov["samples"] = provenance.samples;
  prov["disagreements"] = provenance.disagreements;
  j["provenance"] = std::move(prov);
  if (include_quadrics) {
    json q = json::array();
    for (const MultiPoly& p : quadrics) q.push_back(p.str());
    j["quadrics"] = std::move(q);
  }
  return j;
}

ExactMatrix evaluation_matrix(std::span<const ProjPoint> points, int degree) {
  if (points.empty()) throw std::invalid_argument("evaluation matrix of an empty point set");
  int r = points.front().ambient_dim();
  const Field& f = points.front().field();
  std::vector<Monomial> monos = monomials_of_degree(r + 1, degree);
  ExactMatrix m(0, static_cast<int>(monos.size()), f);
  for (const ProjPoint& p : points) {
    if (p.ambient_dim() != r) throw std::invalid_argument("points in different ambients");
    // power table per coordinate
    std::vector<std::vector<Scalar>> pow(r + 1, {Scalar::one(f)});
    for (int i = 0; i <= r; ++i)
      for (int d = 0; d < degree; ++d) pow[i].push_back(pow[i].back() * p.coords()[i]);
    std::vector<Scalar> row;
    row.reserve(monos.size());
    for (const Monomial& mono : monos) {
      Scalar v = Scalar::one(f);
      for (int i = 0; i <= r; ++i)
        if (mono.e[i] > 0) v *= pow[i][mono.e[i]];
      row.push_back(std::move(v));
    }
    m.append_row(row);
  }
  return m;
}

MultiPoly quadric_from_kernel_vector(std::span<const Scalar> v, int ambient_dim) {
  std::vector<Monomial> monos = monomials_of_degree(ambient_dim + 1, 2);
  if (v.size() != monos.size()) throw std::invalid_argument("kernel vector length mismatch");
  MultiPoly q(ambient_dim + 1, v.front().field());
  for (std::size_t k = 0; k < monos.size(); ++k) q.add_term(monos[k], v[k]);
  return q;
}

bool certify_quadric_on(const VarietyRep& v, const MultiPoly& quadric) {
  const Field& f = quadric.field();
  if (const Parametrization* par = v.parametrization()) {
    std::vector<MultiPoly> images;
    images.reserve(par->maps.size());
    for (const MultiPoly& m : par->maps) images.push_back(m.to_field(f));
    return substitute(quadric, images).is_zero();
  }
  if (const ImplicitCurve* ic = v.implicit_curve()) {
    std::vector<MultiPoly> images;
    images.reserve(ic->section_basis.size());
    for (const MultiPoly& m : ic->section_basis) images.push_back(m.to_field(f));
    return reduce(substitute(quadric, images), ic->relation).is_zero();
  }
  if (v.is_scroll_divisor()) {
    std::vector<MultiPoly> maps = scroll_maps(v.scroll->type, f);
    MultiPoly pull = substitute(quadric, maps);
    if (pull.is_zero()) return true;
    return divide_exact(pull, v.scroll->form.to_field(f)).has_value();
  }
  // fixed point list: vanishing at every stored point is the definition
  const PointList* pl = v.point_list();
  for (const ProjPoint& p : pl->points) {
    std::vector<Scalar> coords;
    coords.reserve(p.coords().size());
    for (const Scalar& s : p.coords()) coords.push_back(s.to_field(f));
    if (!quadric.eval(coords).is_zero()) return false;
  }
  return true;
}

namespace {

struct RoundResult {
  std::vector<MultiPoly> quadrics;
  int samples = 0;
  ExactMatrix matrix{0, 0, Field::rationals()};
};

// One stabilization pass over a fixed sampling field.
RoundResult stabilize(const VarietyRep& v, const Field& sf, const SamplingPolicy& pol,
                      int attempt, std::uint64_t sub_seed) {
  int r = v.ambient_dim;
  int cols = static_cast<int>(binomial(r + 2, 2));
  int total = cols + pol.initial_extra + attempt * 2 * pol.increment;
  int prev_kernel = -1;
  for (int round = 0;; ++round) {
    if (total > pol.max_points)
      throw CertificationError("kernel dimension failed to stabilize within the point budget");
    Rng rng(derive_seed(sub_seed, "round-" + std::to_string(round)));
    std::vector<SamplePoint> pts = sample_points(v, total, sf, rng);
    std::vector<ProjPoint> raw;
    raw.reserve(pts.size());
    for (SamplePoint& sp : pts) raw.push_back(std::move(sp.point));
    ExactMatrix m = evaluation_matrix(raw, 2);
    int kernel = cols - rank(m);
    if (kernel == prev_kernel) {
      RoundResult out;
      out.samples = static_cast<int>(raw.size());
      out.matrix = std::move(m);
      for (const std::vector<Scalar>& kv : kernel_basis(out.matrix))
        out.quadrics.push_back(quadric_from_kernel_vector(kv, r));
      return out;
    }
    prev_kernel = kernel;
    total += pol.increment;
  }
}

std::uint64_t policy_seed(const VarietyRep& v, const SamplingPolicy& pol) {
  return derive_seed(pol.seed, "quadric-basis:" + tag_name(v.tag) + ":" +
                                   std::to_string(v.ambient_dim) + ":" +
                                   std::to_string(v.degree));
}

}  // namespace

QuadricBasis quadric_basis(const VarietyRep& v, const SamplingPolicy& pol) {
  Field sf = pol.field ? *pol.field : default_sample_field(v, pol.scan_prime);
  QuadricBasis out;
  out.ambient_dim = v.ambient_dim;
  out.variety_dim = v.dim;
  out.provenance.seed = pol.seed;
  out.provenance.sampling_field = sf.describe();
  if (sf.is_prime_field()) out.provenance.primes.push_back(sf.modulus);

  // fixed point lists: one exact kernel, no stabilization
  if (v.point_list() != nullptr && !v.is_scroll_divisor()) {
    const PointList* pl = v.point_list();
    std::vector<ProjPoint> pts;
    for (const ProjPoint& p : pl->points) {
      std::vector<Scalar> coords;
      for (const Scalar& s : p.coords()) coords.push_back(s.to_field(sf));
      pts.emplace_back(std::move(coords));
    }
    ExactMatrix m = evaluation_matrix(pts, 2);
    for (const std::vector<Scalar>& kv : kernel_basis(m))
      out.quadrics.push_back(quadric_from_kernel_vector(kv, v.ambient_dim));
    out.a2 = static_cast<int>(out.quadrics.size());
    out.provenance.samples = static_cast<int>(pts.size());
    if (sf.is_rational()) {
      out.certification = Certification::SymbolicCertified;  // exact finite data
      if (pol.crosscheck) {
        for (std::uint64_t p : {pol.rank_prime, pol.rank_prime_alt}) {
          try {
            int kp = m.cols() - rank(m.to_prime_field(p));
            out.provenance.crosscheck_primes.push_back(p);
            if (kp != out.a2) ++out.provenance.disagreements;
          } catch (const std::domain_error&) {
            // denominator hit the prime; skip it
          }
        }
      }
    } else {
      out.certification = Certification::SymbolicCertified;
    }
    return out;
  }

  std::uint64_t base_seed = policy_seed(v, pol);
  std::string last_failure;
  for (int attempt = 0; attempt <= pol.retries; ++attempt) {
    RoundResult round;
    try {
      round = stabilize(v, sf, pol, attempt, derive_seed(base_seed, "a" + std::to_string(attempt)));
    } catch (const CertificationError& e) {
      last_failure = e.what();
      continue;
    }
    bool all_certified = true;
    for (const MultiPoly& q : round.quadrics)
      if (!certify_quadric_on(v, q)) {
        all_certified = false;
        last_failure = "spurious quadric (under-sampling): " + q.str();
        break;
      }
    if (!all_certified) continue;

    out.quadrics = round.quadrics;
    out.a2 = static_cast<int>(out.quadrics.size());
    out.provenance.samples = round.samples;
    out.certification = Certification::SymbolicCertified;

    if (pol.crosscheck) {
      if (sf.is_prime_field()) {
        std::uint64_t alt = sf.modulus == pol.scan_prime ? pol.scan_prime_alt : pol.scan_prime;
        Field sf2 = Field::prime(alt);
        RoundResult round2 =
            stabilize(v, sf2, pol, 0, derive_seed(base_seed, "alt-prime"));
        bool alt_ok = true;
        for (const MultiPoly& q : round2.quadrics)
          if (!certify_quadric_on(v, q)) alt_ok = false;
        out.provenance.primes.push_back(alt);
        if (!alt_ok || static_cast<int>(round2.quadrics.size()) != out.a2) {
          ++out.provenance.disagreements;
          throw CertificationError("multi-prime disagreement: a2 " + std::to_string(out.a2) +
                                   " vs " + std::to_string(round2.quadrics.size()) +
                                   " at p = " + std::to_string(alt));
        }
      } else {
        for (std::uint64_t p : {pol.rank_prime, pol.rank_prime_alt}) {
          try {
            int kp = round.matrix.cols() - rank(round.matrix.to_prime_field(p));
            out.provenance.crosscheck_primes.push_back(p);
            if (kp != out.a2) ++out.provenance.disagreements;
          } catch (const std::domain_error&) {
          }
        }
      }
    }
    return out;
  }
  throw CertificationError(last_failure.empty() ? "quadric basis certification failed"
                                                : last_failure);
}

bool contains_in_baselocus(const QuadricBasis& basis, const VarietyRep& candidate) {
  if (candidate.point_list() != nullptr && !candidate.is_scroll_divisor() &&
      candidate.parametrization() == nullptr)
    throw std::invalid_argument(
        "contains_in_baselocus needs a parametrization or relation on the candidate");
  for (const MultiPoly& q : basis.quadrics)
    if (!certify_quadric_on(candidate, q)) return false;
  return true;
}

namespace {

// Exact membership of a sampled superset point in a known component, using
// structure where available and certified quadric evidence otherwise.
struct ComponentTest {
  const VarietyRep* comp;
  const VarietyRep* superset;
  std::optional<QuadricBasis> fallback_basis;  // lazily built
  std::vector<MultiPoly> fallback_cubics;      // degree-3 interpolation for surfaces
  const SamplingPolicy* pol;

  bool structural(const SamplePoint& sp, bool& decided) {
    decided = true;
    const VarietyRep& c = *comp;
    if (c.tag == ConstructionTag::Line) return line_contains(c, sp.point);
    if (c.tag == ConstructionTag::Scroll) return scroll_contains(c.scroll->type, sp.point);
    if (c.is_scroll_divisor()) {
      // points sampled on the same scroll carry their fiber parameters
      if (superset->scroll && superset->scroll->type == c.scroll->type &&
          sp.params.size() == 2 + c.scroll->type.size()) {
        return c.scroll->form.to_field(sp.point.field()).eval(sp.params).is_zero();
      }
      return scroll_divisor_contains(c, sp.point);
    }
    if (c.tag == ConstructionTag::EllipticNormal) return elliptic_native_contains(c, sp.point);
    if (const PointList* pl = c.point_list()) {
      for (const ProjPoint& p : pl->points) {
        std::vector<Scalar> coords;
        for (const Scalar& s : p.coords()) coords.push_back(s.to_field(sp.point.field()));
        if (ProjPoint(coords) == sp.point) return true;
      }
      return false;
    }
    decided = false;
    return false;
  }

  bool contains(const SamplePoint& sp) {
    bool decided = false;
    bool structural_hit = structural(sp, decided);
    if (decided) return structural_hit;
    // generic fallback: certified quadrics, plus interpolated cubics for
    // components of dimension >= 2
    if (!fallback_basis) {
      SamplingPolicy p2 = *pol;
      p2.crosscheck = false;
      fallback_basis = quadric_basis(*comp, p2);
      if (comp->dim >= 2) fallback_cubics = interpolate_cubics();
    }
    const Field& f = sp.point.field();
    for (const MultiPoly& q : fallback_basis->quadrics)
      if (!q.to_field(f).eval(sp.point.coords()).is_zero()) return false;
    for (const MultiPoly& q : fallback_cubics)
      if (!q.to_field(f).eval(sp.point.coords()).is_zero()) return false;
    // all interpolated forms vanish; for parametrized curves confirm by an
    // exhaustive parameter scan over a small prime field
    if (const Parametrization* par = comp->parametrization();
        par != nullptr && par->source_vars == 2 && f.is_prime_field() && f.modulus <= 70000) {
      std::uint64_t p = f.modulus;
      std::vector<MultiPoly> maps;
      for (const MultiPoly& m : par->maps) maps.push_back(m.to_field(f));
      for (std::uint64_t t = 0; t <= p; ++t) {
        std::vector<Scalar> params =
            t == p ? std::vector<Scalar>{Scalar::zero(f), Scalar::one(f)}
                   : std::vector<Scalar>{Scalar::one(f), Scalar::residue(t, p)};
        std::vector<Scalar> coords;
        bool nz = false;
        for (const MultiPoly& m : maps) {
          coords.push_back(m.eval(params));
          nz |= !coords.back().is_zero();
        }
        if (nz && ProjPoint(coords) == sp.point) return true;
      }
      return false;
    }
    return true;
  }

  std::vector<MultiPoly> interpolate_cubics() {
    Field sf = fallback_basis->quadrics.empty()
                   ? default_sample_field(*comp, pol->scan_prime)
                   : fallback_basis->quadrics.front().field();
    Rng rng(derive_seed(pol->seed, "cubic-interp"));
    int cols = static_cast<int>(binomial(comp->ambient_dim + 3, 3));
    std::vector<SamplePoint> pts = sample_points(*comp, cols + 15, sf, rng);
    std::vector<ProjPoint> raw;
    for (SamplePoint& sp : pts) raw.push_back(std::move(sp.point));
    ExactMatrix m = evaluation_matrix(raw, 3);
    std::vector<MultiPoly> out;
    std::vector<Monomial> monos = monomials_of_degree(comp->ambient_dim + 1, 3);
    for (const std::vector<Scalar>& kv : kernel_basis(m)) {
      MultiPoly q(comp->ambient_dim + 1, sf);
      for (std::size_t k = 0; k < monos.size(); ++k) q.add_term(monos[k], kv[k]);
      out.push_back(std::move(q));
    }
    return out;
  }
};

}  // namespace

BaseLocusReport exclusion_witnesses(const QuadricBasis& basis, const VarietyRep& superset,
                                    std::span<const VarietyRep> known, int trials,
                                    std::uint64_t seed) {
  BaseLocusReport report;
  SamplingPolicy pol;
  pol.seed = seed;
  // prime-field quadrics pin the probing field; rational ones reduce anywhere
  Field sf = default_sample_field(superset);
  if (!basis.quadrics.empty() && basis.quadrics.front().field().is_prime_field())
    sf = basis.quadrics.front().field();
  std::vector<MultiPoly> quadrics;
  quadrics.reserve(basis.quadrics.size());
  for (const MultiPoly& q : basis.quadrics) quadrics.push_back(q.to_field(sf));

  std::vector<ComponentTest> tests;
  tests.reserve(known.size());
  for (const VarietyRep& k : known) {
    // Bezout-style dimension bound on every candidate component
    if (k.dim > basis.variety_dim + 1)
      throw std::invalid_argument("candidate component exceeds the dimension bound n+1");
    tests.push_back(ComponentTest{&k, &superset, std::nullopt, {}, &pol});
  }
  for (const VarietyRep& k : known) {
    if (k.point_list() != nullptr && !k.is_scroll_divisor() && k.parametrization() == nullptr)
      continue;  // no symbolic surface to certify against
    if (contains_in_baselocus(basis, k))
      report.certified_components.emplace_back(k.describe(), "SymbolicPullback");
  }

  Rng rng(derive_seed(seed, "exclusion-witnesses"));
  std::vector<SamplePoint> probes = sample_points(superset, trials, sf, rng);
  report.probes = static_cast<int>(probes.size());
  for (const SamplePoint& sp : probes) {
    bool on_component = false;
    for (ComponentTest& t : tests)
      if (t.contains(sp)) {
        on_component = true;
        break;
      }
    if (on_component) {
      ++report.discarded_on_components;
      continue;
    }
    int witness = -1;
    for (std::size_t i = 0; i < quadrics.size(); ++i)
      if (!quadrics[i].eval(sp.point.coords()).is_zero()) {
        witness = static_cast<int>(i);
        break;
      }
    if (witness >= 0)
      report.excluded.push_back(ExcludedWitness{sp.point, witness});
    else
      report.counterexample_candidates.push_back(sp.point);
  }
  return report;
}

}  // namespace qs
