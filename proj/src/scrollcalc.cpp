#include "qs/scrollcalc.hpp"

#include <numeric>
#include <stdexcept>

namespace qs {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

void validate_scroll_type(const std::vector<int>& type) {
  if (type.empty()) throw std::invalid_argument("scroll type must be nonempty");
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type[i] < 0) throw std::invalid_argument("scroll type entries must be non-negative");
    if (i && type[i] < type[i - 1]) throw std::invalid_argument("scroll type must be sorted");
  }
  if (type.back() < 1) throw std::invalid_argument("scroll type needs a_{n+1} >= 1");
}

int scroll_dim(const std::vector<int>& type) { return static_cast<int>(type.size()); }

int scroll_ambient_dim(const std::vector<int>& type) {
  return static_cast<int>(type.size()) - 1 +
         std::accumulate(type.begin(), type.end(), 0);
}

long long scroll_degree(const std::vector<int>& type) {
  return std::accumulate(type.begin(), type.end(), 0ll);
}

ScrollDivisorClass::ScrollDivisorClass(std::vector<int> t, int a_coeff, long long b_coeff)
    : type(std::move(t)), a(a_coeff), b(b_coeff) {
  validate_scroll_type(type);
  if (a < 0) throw std::invalid_argument("divisor class needs a >= 0");
}

long long ScrollDivisorClass::degree() const { return a * scroll_degree(type) + b; }

long long h0_class(const std::vector<int>& type, int a, long long b) {
  validate_scroll_type(type);
  if (a < 0) return 0;
  long long total = 0;
  for (const Monomial& I : monomials_of_degree(static_cast<int>(type.size()), a)) {
    long long fiber_deg = b;
    for (int i = 0; i < I.nvars(); ++i) fiber_deg += static_cast<long long>(I.e[i]) * type[i];
    if (fiber_deg >= 0) total += fiber_deg + 1;
  }
  return total;
}

bool is_nondegenerate_class(const ScrollDivisorClass& c) {
  int top = c.type.back();
  if (c.a == 0) return c.b >= 1 + top;
  if (c.a == 1) return c.b >= 1;
  return c.b >= -static_cast<long long>(c.a) * top;
}

bool q_equals_scroll(const ScrollDivisorClass& c) {
  int top = c.type.back();
  bool by_cases;
  if (c.a == 0)
    by_cases = c.b >= 1 + 2ll * top;
  else if (c.a == 1)
    by_cases = c.b >= 1 + top;
  else if (c.a == 2)
    by_cases = c.b >= 1;
  else
    by_cases = true;  // a >= 3
  bool by_sections = h0_class(c.type, 2 - c.a, -c.b) == 0;
  if (by_cases != by_sections)
    throw std::logic_error("q_equals_scroll: case analysis disagrees with the section count");
  return by_cases;
}

long long scroll_a2(const std::vector<int>& type) {
  int r = scroll_ambient_dim(type);
  return binomial(r + 2, 2) - h0_class(type, 2, 0);
}

long long predicted_a2(const ScrollDivisorClass& c) {
  if (!is_nondegenerate_class(c))
    throw std::invalid_argument("predicted_a2 requires a nondegenerate divisor class");
  return scroll_a2(c.type) + h0_class(c.type, 2 - c.a, -c.b);
}

std::vector<Monomial> divisor_monomial_basis(const ScrollDivisorClass& c) {
  int fiber_vars = static_cast<int>(c.type.size());
  int nvars = 2 + fiber_vars;  // s, t, u_1..u_{n+1}
  std::vector<Monomial> out;
  for (const Monomial& I : monomials_of_degree(fiber_vars, c.a)) {
    long long fiber_deg = c.b;
    for (int i = 0; i < fiber_vars; ++i) fiber_deg += static_cast<long long>(I.e[i]) * c.type[i];
    for (long long j = 0; fiber_deg >= 0 && j <= fiber_deg; ++j) {
      Monomial m = Monomial::unit(nvars);
      m.e[0] = static_cast<std::uint32_t>(fiber_deg - j);  // s exponent
      m.e[1] = static_cast<std::uint32_t>(j);              // t exponent
      for (int i = 0; i < fiber_vars; ++i) m.e[2 + i] = I.e[i];
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace qs
