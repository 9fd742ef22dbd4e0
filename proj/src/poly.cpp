#include "qs/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qs {

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += static_cast<int>(x);
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  if (e.size() != o.e.size()) throw std::invalid_argument("monomial variable counts differ");
  Monomial m = *this;
  for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (e.size() != o.e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  if (!o.divides(*this)) throw std::invalid_argument("monomial quotient not defined");
  Monomial m = *this;
  for (std::size_t i = 0; i < e.size(); ++i) m.e[i] -= o.e[i];
  return m;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

namespace {

void enumerate_degree(int nvars, int degree, std::vector<std::uint32_t>& prefix,
                      std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == nvars - 1) {
    prefix.push_back(static_cast<std::uint32_t>(degree));
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(static_cast<std::uint32_t>(e));
    enumerate_degree(nvars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  if (nvars < 1) throw std::invalid_argument("monomials_of_degree needs nvars >= 1");
  if (degree < 0) throw std::invalid_argument("monomials_of_degree needs degree >= 0");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> prefix;
  enumerate_degree(nvars, degree, prefix, out);
  return out;
}

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
  MultiPoly p(nvars, c.field());
  p.add_term(Monomial::unit(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, const Field& f) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Monomial m = Monomial::unit(nvars);
  m.e[index] = 1;
  MultiPoly p(nvars, f);
  p.add_term(m, Scalar::one(f));
  return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Scalar& c) {
  MultiPoly p(m.nvars(), c.field());
  p.add_term(m, c);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();  // grlex leading term has max degree
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
  return d;
}

const std::pair<const Monomial, Scalar>& MultiPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.begin();
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial variable count mismatch");
  if (!(c.field() == field_)) throw std::invalid_argument("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(nvars_, field_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  MultiPoly p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  MultiPoly p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
  return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  MultiPoly p(nvars_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) p.add_term(ma.times(mb), ca * cb);
  return p;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly p(nvars_, field_);
  if (c.is_zero()) return p;
  for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
  return p;
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong length");
  // power table up to the per-variable maximum
  std::vector<std::vector<Scalar>> pow(nvars_);
  for (int i = 0; i < nvars_; ++i) pow[i].push_back(Scalar::one(field_));
  Scalar acc = Scalar::zero(field_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i) {
      std::uint32_t e = m.e[i];
      if (e == 0) continue;
      while (pow[i].size() <= e) pow[i].push_back(pow[i].back() * point[i]);
      t *= pow[i][e];
    }
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::to_field(const Field& f) const {
  MultiPoly p(nvars_, f);
  for (const auto& [m, c] : terms_) p.add_term(m, c.to_field(f));
  return p;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      out += "*x" + std::to_string(i);
      if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
  }
  return out;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, int nvars, const Field& f) {
  MultiPoly p(nvars, f);
  std::string src = strip(text);
  if (src.empty() || src == "0") return p;
  std::size_t pos = 0;
  while (pos < src.size()) {
    std::size_t plus = src.find(" + ", pos);
    std::string term = src.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    pos = plus == std::string::npos ? src.size() : plus + 3;
    term = strip(term);
    if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
    Monomial m = Monomial::unit(nvars);
    std::string coeff_text;
    std::size_t tp = 0;
    bool first_factor = true;
    while (tp < term.size()) {
      std::size_t star = term.find('*', tp);
      std::string fac = term.substr(tp, star == std::string::npos ? std::string::npos : star - tp);
      tp = star == std::string::npos ? term.size() : star + 1;
      fac = strip(fac);
      if (first_factor) {
        coeff_text = fac;
        first_factor = false;
        continue;
      }
      if (fac.empty() || fac[0] != 'x')
        throw std::invalid_argument("bad factor '" + fac + "' in polynomial text");
      std::size_t caret = fac.find('^');
      int var = std::stoi(fac.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      int exp = caret == std::string::npos ? 1 : std::stoi(fac.substr(caret + 1));
      if (var < 0 || var >= nvars || exp < 1)
        throw std::invalid_argument("bad variable/exponent in polynomial text");
      m.e[var] += static_cast<std::uint32_t>(exp);
    }
    p.add_term(m, Scalar::parse(coeff_text, f));
  }
  return p;
}

MultiPoly substitute(const MultiPoly& target, std::span<const MultiPoly> images) {
  if (static_cast<int>(images.size()) != target.nvars())
    throw std::invalid_argument("substitute: one image per target variable required");
  if (images.empty()) throw std::invalid_argument("substitute: empty image list");
  int out_vars = images.front().nvars();
  const Field& f = target.field();
  for (const MultiPoly& im : images) {
    if (im.nvars() != out_vars)
      throw std::invalid_argument("substitute: images disagree on variable count");
    if (!(im.field() == f)) throw std::invalid_argument("substitute: image field mismatch");
  }
  std::vector<std::vector<MultiPoly>> pow(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    pow[i].push_back(MultiPoly::constant(out_vars, Scalar::one(f)));
  MultiPoly acc(out_vars, f);
  for (const auto& [m, c] : target.terms()) {
    MultiPoly t = MultiPoly::constant(out_vars, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t e = m.e[i];
      if (e == 0) continue;
      while (pow[i].size() <= e) pow[i].push_back(pow[i].back() * images[i]);
      t = t * pow[i][e];
    }
    acc = acc + t;
  }
  return acc;
}

Relation::Relation(int var, int exp, MultiPoly repl)
    : lead_var(var), lead_exp(exp), replacement(std::move(repl)) {
  if (exp < 1) throw std::invalid_argument("relation lead exponent must be >= 1");
  if (var < 0 || var >= replacement.nvars())
    throw std::invalid_argument("relation lead variable out of range");
  if (replacement.degree_in(var) >= exp)
    throw std::invalid_argument("relation replacement involves the lead variable to power >= lead exponent");
}

MultiPoly reduce(const MultiPoly& p, const Relation& rel) {
  MultiPoly cur = p;
  MultiPoly repl = rel.replacement.to_field(cur.field());
  for (;;) {
    // pick any term with lead-variable exponent >= lead_exp
    bool found = false;
    Monomial hit;
    Scalar coef = Scalar::zero(cur.field());
    for (const auto& [m, c] : cur.terms()) {
      if (static_cast<int>(m.e[rel.lead_var]) >= rel.lead_exp) {
        hit = m;
        coef = c;
        found = true;
        break;
      }
    }
    if (!found) return cur;
    Monomial reduced = hit;
    reduced.e[rel.lead_var] -= static_cast<std::uint32_t>(rel.lead_exp);
    cur.add_term(hit, -coef);
    cur = cur + repl.scaled(coef) * MultiPoly::term(reduced, Scalar::one(cur.field()));
  }
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.nvars() != g.nvars()) throw std::invalid_argument("divide_exact variable count mismatch");
  MultiPoly rem = p;
  MultiPoly quot(p.nvars(), p.field());
  const auto& [gm, gc] = g.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!gm.divides(rm)) return std::nullopt;  // leading term lands in the remainder
    MultiPoly t = MultiPoly::term(rm.quotient(gm), rc / gc);
    quot = quot + t;
    rem = rem - t * g;
  }
  return quot;
}

int univ_degree(const std::vector<Scalar>& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (!c[i].is_zero()) return i;
  return -1;
}

namespace {

std::vector<Scalar> univ_rem(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  int db = univ_degree(b);
  if (db < 0) throw std::invalid_argument("univariate remainder by zero");
  for (int da = univ_degree(a); da >= db; da = univ_degree(a)) {
    Scalar factor = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
  }
  return a;
}

}  // namespace

std::vector<Scalar> univ_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
  while (univ_degree(b) >= 0) {
    std::vector<Scalar> r = univ_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  int d = univ_degree(a);
  if (d < 0) return a;
  Scalar inv = a[d].inverse();
  for (Scalar& s : a) s *= inv;
  a.resize(d + 1);
  return a;
}

std::vector<Scalar> binary_form_coeffs(const MultiPoly& p, int degree) {
  if (p.nvars() != 2) throw std::invalid_argument("binary form requires 2 variables");
  std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar::zero(p.field()));
  for (const auto& [m, coef] : p.terms()) {
    if (m.degree() != degree)
      throw std::invalid_argument("polynomial is not homogeneous of the stated degree");
    c[m.e[1]] = coef;
  }
  return c;
}

}  // namespace qs
