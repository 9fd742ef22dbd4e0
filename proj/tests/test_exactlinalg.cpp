#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qs/matrix.hpp>
#include <qs/poly.hpp>
#include <qs/rng.hpp>

using namespace qs;

namespace {

// independent determinant by cofactor expansion; test-only oracle
Scalar det_oracle(const ExactMatrix& m) {
  int n = m.rows();
  if (n == 1) return m.at(0, 0);
  Scalar acc = Scalar::zero(m.field());
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    ExactMatrix minor(n - 1, n - 1, m.field());
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cc++) = m.at(i, k);
      }
    }
    Scalar term = m.at(0, j) * det_oracle(minor);
    acc = sign > 0 ? acc + term : acc - term;
    sign = -sign;
  }
  return acc;
}

// rank oracle: largest k with a nonzero k x k minor
int rank_oracle(const ExactMatrix& m) {
  int best = 0;
  std::vector<int> rows(m.rows()), cols(m.cols());
  for (int i = 0; i < m.rows(); ++i) rows[i] = i;
  for (int j = 0; j < m.cols(); ++j) cols[j] = j;
  for (int k = std::min(m.rows(), m.cols()); k >= 1; --k) {
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = i;
    bool found = false;
    for (;;) {  // row subsets
      for (int i = 0; i < k; ++i) ci[i] = i;
      for (;;) {  // column subsets
        ExactMatrix sub(k, k, m.field());
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
        if (!det_oracle(sub).is_zero()) {
          found = true;
          break;
        }
        int t = k - 1;
        while (t >= 0 && ci[t] == m.cols() - k + t) --t;
        if (t < 0) break;
        ++ci[t];
        for (int u = t + 1; u < k; ++u) ci[u] = ci[u - 1] + 1;
      }
      if (found) break;
      int t = k - 1;
      while (t >= 0 && ri[t] == m.rows() - k + t) --t;
      if (t < 0) break;
      ++ri[t];
      for (int u = t + 1; u < k; ++u) ri[u] = ri[u - 1] + 1;
    }
    if (found) return k;
  }
  return best;
}

ExactMatrix random_matrix(int rows, int cols, const Field& f, Rng& rng, long long box) {
  ExactMatrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(f, box);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic stays reduced and exact") {
  Field q = Field::rationals();
  Scalar a = Scalar::parse("3/6", q);
  CHECK(a == Scalar::parse("1/2", q));
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  Scalar b = Scalar::parse("-7/3", q);
  CHECK((a * b).str() == "-7/6");
  CHECK((b / b).is_one());
  CHECK(b.inverse().str() == "-3/7");

  Field p = Field::prime(32003);
  Scalar r = Scalar::parse("-1", p);
  CHECK(r.res() == 32002);
  CHECK((r * r).is_one());
  CHECK_THROWS_AS(Scalar::zero(p).inverse(), std::domain_error);
  CHECK_THROWS_AS(Field::prime(32004), std::invalid_argument);
}

TEST_CASE("modular helpers") {
  std::uint64_t p = 32003;
  CHECK(mul_mod(inv_mod(777, p), 777, p) == 1);
  CHECK(pow_mod(5, p - 1, p) == 1);
  auto s = sqrt_mod(4, p);
  REQUIRE(s.has_value());
  CHECK(mul_mod(*s, *s, p) == 4);
  int residues = 0;
  for (std::uint64_t a = 1; a < 200; ++a)
    if (sqrt_mod(a, p)) ++residues;
  CHECK(residues > 60);  // roughly half
  CHECK(is_prime_u64(kRankPrime));
  CHECK(is_prime_u64(kRankPrimeAlt));
  CHECK(is_prime_u64(kScanPrime));
  CHECK(is_prime_u64(kScanPrimeAlt));
  CHECK_FALSE(is_prime_u64(1ull << 31));
}

TEST_CASE("rref identity and proportional rows") {
  Field q = Field::rationals();
  RrefResult r = rref(ExactMatrix::identity(2, q));
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<int>{0, 1});

  ExactMatrix m(2, 2, q);
  m.at(0, 0) = Scalar::of_int(q, 1);
  m.at(0, 1) = Scalar::of_int(q, 2);
  m.at(1, 0) = Scalar::of_int(q, 2);
  m.at(1, 1) = Scalar::of_int(q, 4);
  CHECK(rank(m) == 1);

  CHECK(rank(ExactMatrix(0, 0, q)) == 0);  // empty matrix
}

TEST_CASE("rref is idempotent") {
  Rng rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(kScanPrime)}) {
    for (int trial = 0; trial < 6; ++trial) {
      ExactMatrix m = random_matrix(5, 7, f, rng, 9);
      RrefResult r1 = rref(m);
      RrefResult r2 = rref(r1.matrix);
      CHECK(r1.matrix == r2.matrix);
      CHECK(r1.rank == r2.rank);
    }
  }
}

TEST_CASE("rank over QQ agrees with rank mod two large primes") {
  Rng rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    ExactMatrix m = random_matrix(10, 10, Field::rationals(), rng, 50);
    int rq = rank(m);
    CHECK(rq == rank(m.to_prime_field(kRankPrime)));
    CHECK(rq == rank(m.to_prime_field(kRankPrimeAlt)));
  }
}

TEST_CASE("kernel of identity and of the zero map") {
  Field q = Field::rationals();
  CHECK(kernel_basis(ExactMatrix::identity(4, q)).empty());
  ExactMatrix z(3, 5, q);
  CHECK(kernel_basis(z).size() == 5);
}

TEST_CASE("seven points on the twisted cubic leave a 3-dimensional quadric kernel") {
  Field q = Field::rationals();
  // degree-2 monomial evaluation matrix at 7 exact parameter values
  long long ts[7] = {-3, -2, -1, 0, 1, 2, 4};
  std::vector<Monomial> monos = monomials_of_degree(4, 2);
  REQUIRE(monos.size() == 10);
  ExactMatrix m(7, 10, q);
  for (int i = 0; i < 7; ++i) {
    Scalar t = Scalar::of_int(q, ts[i]);
    std::vector<Scalar> pt{Scalar::one(q), t, t * t, t * t * t};
    for (int j = 0; j < 10; ++j) {
      Scalar v = Scalar::one(q);
      for (int k = 0; k < 4; ++k)
        for (std::uint32_t e = 0; e < monos[j].e[k]; ++e) v *= pt[k];
      m.at(i, j) = v;
    }
  }
  CHECK(rank_oracle(m) == 7);  // independent minor-rank oracle
  std::vector<std::vector<Scalar>> ker = kernel_basis(m);
  CHECK(ker.size() == 3);

  // the Hankel quadrics x0x2 - x1^2, x0x3 - x1x2, x1x3 - x2^2 certify it
  auto quadric_vector = [&](int a, int b, int c, int d) {
    // x_a x_b - x_c x_d as a coefficient vector over the monomial list
    std::vector<Scalar> v(10, Scalar::zero(q));
    Monomial m1 = Monomial::unit(4), m2 = Monomial::unit(4);
    m1.e[a] += 1;
    m1.e[b] += 1;
    m2.e[c] += 1;
    m2.e[d] += 1;
    for (int j = 0; j < 10; ++j) {
      if (monos[j] == m1) v[j] = Scalar::one(q);
      if (monos[j] == m2) v[j] = -Scalar::one(q);
    }
    return v;
  };
  for (auto v : {quadric_vector(0, 2, 1, 1), quadric_vector(0, 3, 1, 2), quadric_vector(1, 3, 2, 2)})
    for (const Scalar& s : m.multiply(v)) CHECK(s.is_zero());
}

TEST_CASE("kernel vectors satisfy m*v = 0 exactly") {
  Rng rng(99);
  for (const Field& f : {Field::rationals(), Field::prime(kScanPrime)}) {
    ExactMatrix m = random_matrix(4, 9, f, rng, 20);
    for (const auto& v : kernel_basis(m))
      for (const Scalar& s : m.multiply(v)) CHECK(s.is_zero());
  }
}
