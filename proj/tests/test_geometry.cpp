#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qs/geometry.hpp>
#include <qs/quadspace.hpp>
#include <qs/variety.hpp>

using namespace qs;

namespace {

Field QQ = Field::rationals();

ProjPoint pt(std::initializer_list<long long> cs) {
  std::vector<Scalar> v;
  for (long long c : cs) v.push_back(Scalar::of_int(QQ, c));
  return ProjPoint(v);
}

ProjPoint rnc_point(int r, long long t) {
  std::vector<Scalar> v;
  Scalar acc = Scalar::one(QQ), tv = Scalar::of_int(QQ, t);
  for (int i = 0; i <= r; ++i) {
    v.push_back(acc);
    acc *= tv;
  }
  return ProjPoint(v);
}

// test-only Vandermonde determinant: prod_{i<j} (t_j - t_i)
bool vandermonde_nonzero(const std::vector<long long>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (ts[i] == ts[j]) return false;
  return true;
}

}  // namespace

TEST_CASE("projective points normalize and reject the zero vector") {
  ProjPoint p = pt({0, 3, 6});
  CHECK(p.coords()[1].is_one());
  CHECK(p.coords()[2].str() == "2");
  CHECK(p == pt({0, 5, 10}));
  CHECK_THROWS_AS(pt({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("span dimensions") {
  CHECK(span_dimension(std::vector<ProjPoint>{}) == -1);
  // three collinear points in P^3
  std::vector<ProjPoint> line{pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({1, 1, 0, 0})};
  CHECK(span_dimension(line) == 1);
  // coordinate points of P^r
  for (int r = 2; r <= 5; ++r) {
    std::vector<ProjPoint> pts;
    for (int i = 0; i <= r; ++i) {
      std::vector<Scalar> v(r + 1, Scalar::zero(QQ));
      v[i] = Scalar::one(QQ);
      pts.emplace_back(v);
    }
    CHECK(span_dimension(pts) == r);
  }
  // c + 4 points on the rational normal curve span P^c (Vandermonde oracle)
  int c = 4;
  std::vector<long long> ts{-3, -1, 0, 1, 2, 5, 7, 11};
  REQUIRE(vandermonde_nonzero(ts));
  std::vector<ProjPoint> pts;
  for (long long t : ts) pts.push_back(rnc_point(c, t));
  CHECK(span_dimension(pts) == c);
}

TEST_CASE("general position") {
  std::vector<ProjPoint> good;
  for (long long t : {-2, -1, 0, 1, 2, 3, 5}) good.push_back(rnc_point(3, t));
  CHECK(general_position_check(good, 2000, 1));

  auto repeated = good;
  repeated.push_back(rnc_point(3, 2));
  CHECK_FALSE(general_position_check(repeated, 2000, 1));

  // c + 3 points with c + 2 of them on a hyperplane (c = 4)
  int c = 4;
  std::vector<ProjPoint> degenerate;
  for (long long t : {-2, -1, 0, 1, 2, 3}) {
    ProjPoint p = rnc_point(c - 1, t);  // spans only a hyperplane of P^4
    std::vector<Scalar> ext = p.coords();
    ext.push_back(Scalar::zero(QQ));
    degenerate.emplace_back(ext);
  }
  degenerate.push_back(pt({0, 0, 0, 0, 1}));
  CHECK_FALSE(general_position_check(degenerate, 2000, 1));
}

TEST_CASE("projection of coordinate points from a coordinate center") {
  ProjPoint center = pt({0, 0, 0, 1});
  LinearProjection proj = LinearProjection::from_center(center);
  std::vector<ProjPoint> images = project_points(
      std::vector<ProjPoint>{pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0})}, proj);
  CHECK(images.size() == 3);
  CHECK(span_dimension(images) == 2);
  CHECK_THROWS_AS(proj.apply(center), std::domain_error);
}

TEST_CASE("projection from a chord point collapses two parameters") {
  VarietyRep cubic = rational_normal_curve(3);
  // chord through phi(0) = (1,0,0,0) and phi(1) = (1,1,1,1)
  ProjPoint chord = pt({2, 1, 1, 1});
  VarietyRep image = project_from_point(cubic, chord);
  const Parametrization* par = image.parametrization();
  REQUIRE(par != nullptr);
  std::vector<Scalar> at0{Scalar::one(QQ), Scalar::zero(QQ)};
  std::vector<Scalar> at1{Scalar::one(QQ), Scalar::one(QQ)};
  std::vector<Scalar> img0, img1;
  for (const MultiPoly& m : par->maps) {
    img0.push_back(m.eval(at0));
    img1.push_back(m.eval(at1));
  }
  CHECK(ProjPoint(img0) == ProjPoint(img1));  // non-injectivity detected by sampling
}

TEST_CASE("projection center on the curve is rejected") {
  VarietyRep cubic = rational_normal_curve(3);
  CHECK_THROWS_AS(project_from_point(cubic, pt({1, 2, 4, 8})), std::domain_error);
  CHECK_THROWS_AS(project_from_point(cubic, pt({0, 0, 0, 1})), std::domain_error);
}

TEST_CASE("hyperplane through four chosen points meets the quartic curve exactly there") {
  int r = 4;
  VarietyRep curve = rational_normal_curve(r);
  std::vector<long long> chosen{-2, 1, 3, 5};
  ExactMatrix m(0, r + 1, QQ);
  for (long long t : chosen) m.append_row(rnc_point(r, t).coords());
  std::vector<std::vector<Scalar>> hyp = kernel_basis(m);
  REQUIRE(hyp.size() == 1);

  SectionAccounting acc = curve_hyperplane_section(curve, hyp.front(), kScanPrime);
  CHECK(acc.with_multiplicity == curve.degree);  // Bezout: exactly d points
  REQUIRE(acc.points.size() == 4);
  // the found points span the hyperplane P^(c) with c = r - 1
  std::vector<ProjPoint> raw;
  for (const SamplePoint& sp : acc.points) raw.push_back(sp.point);
  CHECK(span_dimension(raw) == r - 1);
}

TEST_CASE("random sections account for the full degree") {
  VarietyRep curve = rational_normal_curve(3);
  Rng rng(11);
  Field fp = Field::prime(kScanPrime);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Scalar> h;
    for (int i = 0; i <= 3; ++i) h.push_back(Scalar::of_int(QQ, rng.int_in(-9, 9)));
    bool nz = false;
    for (const Scalar& s : h) nz |= !s.is_zero();
    if (!nz) continue;
    SectionAccounting acc = curve_hyperplane_section(curve, h, kScanPrime);
    CHECK(acc.with_multiplicity == 3);
  }
}

TEST_CASE("S(1,2) cut by two random hyperplanes has exactly three points") {
  VarietyRep s12 = scroll({1, 2});
  Rng rng(23);
  std::vector<std::vector<Scalar>> hyps;
  for (int k = 0; k < 2; ++k) {
    std::vector<Scalar> h;
    for (int i = 0; i <= s12.ambient_dim; ++i) h.push_back(Scalar::of_int(QQ, rng.int_in(-9, 9)));
    hyps.push_back(h);
  }
  SectionAccounting acc = scroll_full_section(s12, hyps, kScanPrime);
  CHECK(acc.with_multiplicity == 3);  // deg S(1,2) = 3
  for (const SamplePoint& sp : acc.points) {
    CHECK(scroll_contains({1, 2}, sp.point));
  }
}

TEST_CASE("random_linear_section returns section points on the variety") {
  VarietyRep curve = rational_normal_curve(4);
  VarietyRep section = random_linear_section(curve, 1, 7);
  const PointList* pl = section.point_list();
  REQUIRE(pl != nullptr);
  CHECK(section.dim == 0);
  CHECK(!pl->points.empty());
}

TEST_CASE("line membership") {
  VarietyRep line = coordinate_line(4);
  CHECK(line_contains(line, pt({1, 5, 0, 0, 0})));
  CHECK_FALSE(line_contains(line, pt({1, 5, 1, 0, 0})));
}

TEST_CASE("scroll membership recovers fiber parameters") {
  VarietyRep s12 = scroll({1, 2});
  Rng rng(3);
  Field fp = Field::prime(kScanPrime);
  std::vector<SamplePoint> pts = sample_points(s12, 25, fp, rng);
  for (const SamplePoint& sp : pts) {
    std::vector<Scalar> params;
    CHECK(scroll_contains({1, 2}, sp.point, &params));
  }
  CHECK_FALSE(scroll_contains({1, 2}, ProjPoint(std::vector<Scalar>{
                                          Scalar::residue(1, kScanPrime), Scalar::residue(2, kScanPrime),
                                          Scalar::residue(3, kScanPrime), Scalar::residue(5, kScanPrime),
                                          Scalar::residue(11, kScanPrime)})));
}

TEST_CASE("general position is exhaustive for small configurations on the curve") {
  // every subset of distinct points on a rational normal curve is independent
  for (int c : {3, 4, 5}) {
    std::vector<ProjPoint> pts;
    for (long long t = -6; t < 6; ++t) pts.push_back(rnc_point(c, t));  // 12 points
    CHECK(general_position_check(pts, 2000, 1));                        // exhaustive: C(12,c+1)
  }
}

TEST_CASE("projection from a generic point preserves nondegeneracy") {
  VarietyRep quintic = rational_normal_curve(5);
  ProjPoint center = pt({1, 3, -2, 7, 1, 5});
  VarietyRep image = project_from_point(quintic, center);
  CHECK(image.ambient_dim == 4);
  CHECK(image.codim == 3);
  Rng rng(3);
  std::vector<ProjPoint> samples;
  for (const SamplePoint& sp : sample_points(image, 14, Field::rationals(), rng))
    samples.push_back(sp.point);
  CHECK(span_dimension(samples) == 4);
}
