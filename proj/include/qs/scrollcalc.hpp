#ifndef QS_SCROLLCALC_HPP
#define QS_SCROLLCALC_HPP

#include <vector>

#include "qs/poly.hpp"

namespace qs {

long long binomial(int n, int k);

// Dimensions of the rational normal scroll S(a_1,...,a_{n+1}).
// The type list has n+1 entries; the scroll has dimension n+1, lives in
// P^(n + sum a_i) and has degree sum a_i.
int scroll_dim(const std::vector<int>& type);
int scroll_ambient_dim(const std::vector<int>& type);
long long scroll_degree(const std::vector<int>& type);
void validate_scroll_type(const std::vector<int>& type);  // sorted, a_{n+1} >= 1

// Divisor class aH + bF on the scroll of the given type.
struct ScrollDivisorClass {
  std::vector<int> type;  // a_1 <= ... <= a_{n+1}, a_{n+1} >= 1
  int a = 0;              // H coefficient, >= 0
  long long b = 0;        // F coefficient

  ScrollDivisorClass(std::vector<int> t, int a_coeff, long long b_coeff);
  long long degree() const;  // a * deg(scroll) + b
};

// Global sections of O(aH + bF): sum over |I| = a of max(0, <I,type> + b + 1);
// zero when a < 0.
long long h0_class(const std::vector<int>& type, int a, long long b);
inline long long h0_class(const ScrollDivisorClass& c) { return h0_class(c.type, c.a, c.b); }

// The class contains no nonzero linear forms exactly when
//   a = 0 and b >= 1 + a_{n+1},  or  a = 1 and b >= 1,  or
//   a >= 2 and b >= -a * a_{n+1}.
bool is_nondegenerate_class(const ScrollDivisorClass& c);

// The quadrics through a divisor of this class cut out the whole scroll
// exactly when
//   a = 0 and b >= 1 + 2a_{n+1},  or  a = 1 and b >= 1 + a_{n+1},  or
//   a = 2 and b >= 1,  or  a >= 3.
// Equivalent to h0((2-a)H - bF) = 0; both routes are computed and compared,
// and a mismatch raises an internal-consistency error.
bool q_equals_scroll(const ScrollDivisorClass& c);

// a2 of a divisor in the class: a2(Y) + h0((2-a)H - bF), where
// a2(Y) = C(r+2,2) - h0(2H). Requires a nondegenerate class.
long long predicted_a2(const ScrollDivisorClass& c);

// a2 of the scroll itself.
long long scroll_a2(const std::vector<int>& type);

// Monomial basis of H^0(O(aH + bF)) in the variables (s, t, u_1..u_{n+1}):
// u^I s^(<I,type>+b-j) t^j for |I| = a and 0 <= j <= <I,type> + b.
std::vector<Monomial> divisor_monomial_basis(const ScrollDivisorClass& c);

}  // namespace qs

#endif
