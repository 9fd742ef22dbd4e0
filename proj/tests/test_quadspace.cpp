#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qs/quadspace.hpp>
#include <qs/variety.hpp>

using namespace qs;

namespace {

Field QQ = Field::rationals();

ExactMatrix coefficient_matrix(const std::vector<MultiPoly>& quadrics, int ambient_dim) {
  std::vector<Monomial> monos = monomials_of_degree(ambient_dim + 1, 2);
  const Field& f = quadrics.front().field();
  ExactMatrix m(0, static_cast<int>(monos.size()), f);
  for (const MultiPoly& q : quadrics) {
    std::vector<Scalar> row;
    for (const Monomial& mono : monos) row.push_back(q.coefficient(mono));
    m.append_row(row);
  }
  return m;
}

}  // namespace

TEST_CASE("evaluation matrix shapes and ranks") {
  // one point of P^2, degree 2
  std::vector<ProjPoint> one{ProjPoint(
      std::vector<Scalar>{Scalar::of_int(QQ, 1), Scalar::of_int(QQ, 2), Scalar::of_int(QQ, 3)})};
  ExactMatrix m1 = evaluation_matrix(one, 2);
  CHECK(m1.rows() == 1);
  CHECK(m1.cols() == 6);

  // nine points on the rational normal curve in P^4
  VarietyRep g = point_config_on_rnc(4, 9, 5);
  ExactMatrix m9 = evaluation_matrix(g.point_list()->points, 2);
  CHECK(m9.rows() == 9);
  CHECK(m9.cols() == 15);
  CHECK(rank(m9) == 9);
  CHECK(kernel_basis(m9).size() == 6);  // C(6,2) - 9

  // a duplicated point leaves the rank unchanged
  std::vector<ProjPoint> dup = g.point_list()->points;
  dup.push_back(dup.front());
  CHECK(rank(evaluation_matrix(dup, 2)) == 9);
}

TEST_CASE("twisted cubic: a2 = 3, symbolically certified, Hankel row space") {
  VarietyRep tw = rational_normal_curve(3);
  SamplingPolicy pol;
  pol.seed = 1;
  QuadricBasis basis = quadric_basis(tw, pol);
  CHECK(basis.a2 == 3);
  CHECK(basis.certification == Certification::SymbolicCertified);
  CHECK(basis.provenance.disagreements == 0);

  // the Hankel minors span the same row space
  std::vector<MultiPoly> hankel;
  auto quad = [&](int a, int b, int c, int d) {
    MultiPoly q(4, QQ);
    Monomial m1 = Monomial::unit(4), m2 = Monomial::unit(4);
    m1.e[a] += 1;
    m1.e[b] += 1;
    m2.e[c] += 1;
    m2.e[d] += 1;
    q.add_term(m1, Scalar::one(QQ));
    q.add_term(m2, -Scalar::one(QQ));
    return q;
  };
  hankel.push_back(quad(0, 2, 1, 1));
  hankel.push_back(quad(0, 3, 1, 2));
  hankel.push_back(quad(1, 3, 2, 2));
  CHECK(rref(coefficient_matrix(basis.quadrics, 3)).matrix ==
        rref(coefficient_matrix(hankel, 3)).matrix);

  // determinism across seeds: same a2, same row space
  SamplingPolicy pol2;
  pol2.seed = 424242;
  QuadricBasis basis2 = quadric_basis(tw, pol2);
  CHECK(basis2.a2 == 3);
  CHECK(rref(coefficient_matrix(basis.quadrics, 3)).matrix ==
        rref(coefficient_matrix(basis2.quadrics, 3)).matrix);
}

TEST_CASE("quintic elliptic curve in P^4 has a2 = 5") {
  VarietyRep e = elliptic_normal_curve(3, Scalar::of_int(QQ, -1), Scalar::of_int(QQ, 0));
  SamplingPolicy pol;
  pol.seed = 2;
  QuadricBasis basis = quadric_basis(e, pol);
  CHECK(basis.a2 == 5);
  CHECK(basis.certification == Certification::SymbolicCertified);
  CHECK(basis.provenance.primes.size() == 2);  // scan prime + alternate
}

TEST_CASE("S(1,2) has a2 = 3, matching the section-count route") {
  VarietyRep s12 = scroll({1, 2});
  SamplingPolicy pol;
  pol.seed = 3;
  QuadricBasis basis = quadric_basis(s12, pol);
  CHECK(basis.a2 == 3);
  CHECK(basis.a2 == binomial(4 + 2, 2) - h0_class({1, 2}, 2, 0));
  CHECK(basis.certification == Certification::SymbolicCertified);
}

TEST_CASE("worked divisor class: 2H - 2F on S(1,2)") {
  VarietyRep x = scroll_divisor_samples({1, 2}, 2, -2, 40, 7);
  SamplingPolicy pol;
  pol.seed = 7;
  QuadricBasis basis = quadric_basis(x, pol);
  CHECK(basis.a2 == 6);
  CHECK(basis.a2 == predicted_a2({{1, 2}, 2, -2}));
  CHECK(basis.certification == Certification::SymbolicCertified);
}

TEST_CASE("containment of candidates in the base locus") {
  // X of class 3H on the Segre threefold: its quadrics vanish on all of Y
  VarietyRep x = scroll_divisor_samples({1, 1, 1}, 3, 0, 60, 9);
  SamplingPolicy pol;
  pol.seed = 9;
  QuadricBasis bx = quadric_basis(x, pol);
  CHECK(bx.a2 == 3);
  VarietyRep y = scroll({1, 1, 1});
  CHECK(contains_in_baselocus(bx, y));

  // the twisted cubic's quadrics do not vanish on a random line
  VarietyRep tw = rational_normal_curve(3);
  SamplingPolicy pol2;
  pol2.seed = 11;
  QuadricBasis btw = quadric_basis(tw, pol2);
  VarietyRep line = coordinate_line(3);
  CHECK_FALSE(contains_in_baselocus(btw, line));
}

TEST_CASE("exclusion witnesses on the scroll probe") {
  // Q(X) = X for X of class 2H - 2F on S(1,2): every off-X probe is excluded
  VarietyRep x = scroll_divisor_samples({1, 2}, 2, -2, 40, 13);
  SamplingPolicy pol;
  pol.seed = 13;
  QuadricBasis bx = quadric_basis(x, pol);
  VarietyRep y = scroll({1, 2});
  std::vector<VarietyRep> known{x};
  BaseLocusReport rep = exclusion_witnesses(bx, y, known, 150, 17);
  CHECK(rep.clean());
  CHECK(rep.probes == 150);
  CHECK(rep.excluded.size() + rep.discarded_on_components == 150);
  CHECK(!rep.excluded.empty());
}

TEST_CASE("ambient probes of the twisted cubic are all excluded") {
  VarietyRep tw = rational_normal_curve(3);
  SamplingPolicy pol;
  pol.seed = 15;
  QuadricBasis btw = quadric_basis(tw, pol);
  VarietyRep probe = ambient_points(3, 120, 19, QQ);
  std::vector<VarietyRep> known{tw};
  BaseLocusReport rep = exclusion_witnesses(btw, probe, known, 120, 21);
  CHECK(rep.clean());
  CHECK(static_cast<int>(rep.excluded.size()) + rep.discarded_on_components == 120);
}

TEST_CASE("dimension bound rejects oversized candidate components") {
  VarietyRep tw = rational_normal_curve(5);
  SamplingPolicy pol;
  pol.seed = 23;
  QuadricBasis btw = quadric_basis(tw, pol);
  VarietyRep big = scroll({1, 1, 1});  // dim 3 > n + 1 = 2
  // embed mismatch aside, the bound check fires first
  std::vector<VarietyRep> known{big};
  CHECK_THROWS_AS(exclusion_witnesses(btw, ambient_points(5, 10, 1, QQ), known, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("under-sampling is caught by certification, not returned") {
  VarietyRep tw = rational_normal_curve(3);
  SamplingPolicy pol;
  pol.seed = 25;
  pol.initial_extra = -7;  // 3 points only
  pol.increment = 0;       // never grows
  pol.retries = 1;
  CHECK_THROWS_AS(quadric_basis(tw, pol), CertificationError);
}

TEST_CASE("quadric basis JSON carries the provenance block") {
  VarietyRep tw = rational_normal_curve(3);
  SamplingPolicy pol;
  pol.seed = 29;
  QuadricBasis basis = quadric_basis(tw, pol);
  json j = basis.to_json(true);
  CHECK(j.at("a2").get<int>() == 3);
  CHECK(j.at("provenance").contains("seed"));
  CHECK(j.at("provenance").contains("samplingField"));
  CHECK(j.at("quadrics").size() == 3);
}

TEST_CASE("a2 is monotone under linear sections") {
  // quadrics through X vanish on any subset, so a2(X) <= a2(section sample)
  SamplingPolicy pol;
  pol.seed = 31;

  VarietyRep rnc = rational_normal_curve(4);
  QuadricBasis b1 = quadric_basis(rnc, pol);
  VarietyRep sec1 = random_linear_section(rnc, 1, 5);
  QuadricBasis bs1 = quadric_basis(sec1, pol);
  CHECK(b1.a2 <= bs1.a2);

  VarietyRep s12 = scroll({1, 2});
  QuadricBasis b2 = quadric_basis(s12, pol);
  VarietyRep sec2 = random_linear_section(s12, 1, 7);
  QuadricBasis bs2 = quadric_basis(sec2, pol);
  CHECK(b2.a2 <= bs2.a2);

  VarietyRep div = scroll_divisor_samples({1, 2}, 2, -2, 30, 9);
  QuadricBasis b3 = quadric_basis(div, pol);
  VarietyRep sec3 = random_linear_section(div, 1, 9);
  QuadricBasis bs3 = quadric_basis(sec3, pol);
  CHECK(b3.a2 <= bs3.a2);

  VarietyRep ell = elliptic_normal_curve(3, Scalar::of_int(QQ, -1), Scalar::of_int(QQ, 0));
  QuadricBasis b4 = quadric_basis(ell, pol);
  VarietyRep sec4 = random_linear_section(ell, 1, 11);
  QuadricBasis bs4 = quadric_basis(sec4, pol);
  CHECK(b4.a2 <= bs4.a2);
  // zero-dimensional sections of the quintic span the hyperplane section
  CHECK(sec4.dim == 0);
}

TEST_CASE("survivors where every quadric vanishes surface as counterexample candidates") {
  // probing X with its own basis and no known components cannot exclude
  // anything: every probe must be flagged, never silently passed
  VarietyRep x = scroll_divisor_samples({1, 2}, 2, -2, 30, 33);
  SamplingPolicy pol;
  pol.seed = 33;
  QuadricBasis bx = quadric_basis(x, pol);
  BaseLocusReport rep = exclusion_witnesses(bx, x, {}, 25, 35);
  CHECK_FALSE(rep.clean());
  CHECK(rep.counterexample_candidates.size() == 25);
  CHECK(rep.excluded.empty());
}

TEST_CASE("cone-type scroll runs through the whole pipeline") {
  // S(0,1,1): the cone in P^4 over a quadric surface; a2 = 1
  VarietyRep cone = scroll({0, 1, 1});
  CHECK(cone.ambient_dim == 4);
  CHECK(cone.dim == 3);
  CHECK(cone.degree == 2);
  CHECK(scroll_a2({0, 1, 1}) == 1);
  SamplingPolicy pol;
  pol.seed = 37;
  QuadricBasis b = quadric_basis(cone, pol);
  CHECK(b.a2 == 1);
  CHECK(b.certification == Certification::SymbolicCertified);
  Rng rng(39);
  for (const SamplePoint& sp : sample_points(cone, 15, Field::rationals(), rng))
    CHECK(scroll_contains({0, 1, 1}, sp.point));
  // the vertex lies on the cone
  CHECK(scroll_contains({0, 1, 1}, ProjPoint(std::vector<Scalar>{
                                       Scalar::one(QQ), Scalar::zero(QQ), Scalar::zero(QQ),
                                       Scalar::zero(QQ), Scalar::zero(QQ)})));
}

TEST_CASE("divisor class on a larger scroll type") {
  // 2H - F on S(2,3): degree-9 curve in P^6, predicted a2 = 10 + h0(F) = 12
  CHECK(predicted_a2({{2, 3}, 2, -1}) == 12);
  VarietyRep x = scroll_divisor_samples({2, 3}, 2, -1, 46, 41);
  CHECK(x.degree == 9);
  SamplingPolicy pol;
  pol.seed = 41;
  QuadricBasis b = quadric_basis(x, pol);
  CHECK(b.a2 == 12);
  // boundary case of the degree/codimension bound: C(6,2) - min(3,5) = 12
  CHECK(b.a2 == binomial(x.codim + 1, 2) - std::min<long long>(x.degree - x.codim - 1, x.codim));
}

TEST_CASE("a2 of a fiber union matches the section-count prediction") {
  // 3 fibers of S(1,2): predicted a2 = 3 + h0(2H - 3F) = 6
  CHECK(predicted_a2({{1, 2}, 0, 3}) == 6);
  VarietyRep x = scroll_divisor_samples({1, 2}, 0, 3, 40, 47);
  SamplingPolicy pol;
  pol.seed = 47;
  QuadricBasis b = quadric_basis(x, pol);
  CHECK(b.a2 == 6);
  CHECK(b.certification == Certification::SymbolicCertified);
}
