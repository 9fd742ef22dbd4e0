#ifndef QS_POLY_HPP
#define QS_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qs/field.hpp"

namespace qs {

// Exponent vector; one entry per ambient variable.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}
  static Monomial unit(int nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;      // componentwise <=
  Monomial quotient(const Monomial& o) const;  // this / o
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded-lexicographic order: compare total degree, then exponent vectors
// lexicographically (x0 heaviest). Fixed once for the whole project.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// All monomials of the given total degree, leading (lex-largest) first.
// Length is C(nvars-1+degree, degree).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// Sparse multivariate polynomial over one Field. No zero terms are stored;
// iteration starts at the grlex-leading term.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexDescending>;

  MultiPoly(int nvars, const Field& f) : nvars_(nvars), field_(f) {}
  static MultiPoly zero(int nvars, const Field& f) { return MultiPoly(nvars, f); }
  static MultiPoly constant(int nvars, const Scalar& c);
  static MultiPoly variable(int nvars, int index, const Field& f);
  static MultiPoly term(const Monomial& m, const Scalar& c);

  int nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  const std::pair<const Monomial, Scalar>& leading() const;  // throws on zero
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);  // accumulates, drops zeros

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Scalar& c) const;

  Scalar eval(std::span<const Scalar> point) const;
  MultiPoly to_field(const Field& f) const;  // coefficientwise conversion

  // "coeff*x0^e0*x1^e1" terms joined by " + "; exact fractions as num/den.
  std::string str() const;
  static MultiPoly parse(const std::string& text, int nvars, const Field& f);

  bool operator==(const MultiPoly& o) const;

 private:
  int nvars_;
  Field field_;
  TermMap terms_;
};

// Exact composition: target evaluated at the image polynomials.
// images.size() must equal target.nvars(); images share one variable count.
MultiPoly substitute(const MultiPoly& target, std::span<const MultiPoly> images);

// A single rewriting rule lead_var^lead_exp -> replacement, where the
// replacement has degree < lead_exp in lead_var.
struct Relation {
  int lead_var = 0;
  int lead_exp = 1;
  MultiPoly replacement;

  Relation(int var, int exp, MultiPoly repl);
};

// Normal form of p modulo the relation: the result has degree < lead_exp in
// the lead variable and is congruent to p modulo the relation's ideal.
MultiPoly reduce(const MultiPoly& p, const Relation& rel);

// Quotient p / g when g divides p exactly, nullopt otherwise. A single
// polynomial generates its ideal as a Groebner basis, so a zero remainder in
// the division loop is equivalent to membership.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& g);

// Dense univariate helpers (coefficient vectors, index = exponent).
int univ_degree(const std::vector<Scalar>& c);  // -1 for zero
std::vector<Scalar> univ_gcd(std::vector<Scalar> a, std::vector<Scalar> b);  // monic

// Coefficients of a binary form (nvars == 2, homogeneous of degree d):
// c[k] multiplies s^(d-k) t^k. Throws if p is not homogeneous of degree d.
std::vector<Scalar> binary_form_coeffs(const MultiPoly& p, int degree);

}  // namespace qs

#endif
