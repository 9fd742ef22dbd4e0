#include <algorithm>
#include <set>
#include <stdexcept>

#include "qs/variety.hpp"

namespace qs {

namespace {

std::vector<Scalar> eval_maps(std::span<const MultiPoly> maps, std::span<const Scalar> params) {
  std::vector<Scalar> out;
  out.reserve(maps.size());
  for (const MultiPoly& m : maps) out.push_back(m.eval(params));
  return out;
}

bool all_zero(std::span<const Scalar> v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<std::uint64_t> univ_coeffs_u64(const MultiPoly& p) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(std::max(0, p.degree_in(0))) + 1, 0);
  for (const auto& [m, s] : p.terms()) c[m.e[0]] = s.res();
  return c;
}

struct ScanResult {
  std::vector<std::pair<std::uint64_t, int>> roots;
  int cofactor_degree = 0;
};

std::uint64_t horner(const std::vector<std::uint64_t>& c, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), c[i], p);
  return acc;
}

ScanResult scan_roots(std::vector<std::uint64_t> c, std::uint64_t p) {
  ScanResult out;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::invalid_argument("root scan of the zero polynomial");
  for (std::uint64_t x = 0; x < p && c.size() > 1; ++x) {
    int mult = 0;
    while (c.size() > 1 && horner(c, x, p) == 0) {
      std::vector<std::uint64_t> q(c.size() - 1, 0);
      std::uint64_t carry = 0;
      for (std::size_t i = c.size(); i-- > 1;) {
        carry = add_mod(c[i], mul_mod(carry, x, p), p);
        q[i - 1] = carry;
      }
      c = std::move(q);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(x, mult);
  }
  out.cofactor_degree = static_cast<int>(c.size()) - 1;
  return out;
}

// Binary form in (s, t) -> dense coefficients of g(t) = form(1, t).
std::vector<std::uint64_t> dehomog_coeffs(const MultiPoly& form, int degree) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  for (const auto& [m, s] : form.terms()) c[m.e[1]] = s.res();
  return c;
}

MultiPoly pullback_hyperplane(std::span<const MultiPoly> maps, std::span<const Scalar> h) {
  if (maps.size() != h.size()) throw std::invalid_argument("hyperplane length mismatch");
  MultiPoly acc(maps.front().nvars(), maps.front().field());
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!h[i].is_zero()) acc = acc + maps[i].scaled(h[i]);
  return acc;
}

std::vector<Scalar> to_field_vec(std::span<const Scalar> v, const Field& f) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const Scalar& s : v) out.push_back(s.to_field(f));
  return out;
}

// 2x2 .. 4x4 symbolic determinant of binary-form entries (Laplace).
MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 1) return a[0][0];
  MultiPoly acc(a[0][0].nvars(), a[0][0].field());
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<MultiPoly>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (int k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = a[0][j] * det_poly(minor);
    acc = sign > 0 ? acc + term : acc - term;
    sign = -sign;
  }
  return acc;
}

}  // namespace

SectionAccounting curve_hyperplane_section(const VarietyRep& curve,
                                           std::span<const Scalar> hyperplane, std::uint64_t p) {
  const Parametrization* par = curve.parametrization();
  if (par == nullptr || par->source_vars != 2)
    throw std::invalid_argument("curve_hyperplane_section expects a parametrized curve");
  Field pf = Field::prime(p);
  std::vector<MultiPoly> maps;
  for (const MultiPoly& m : par->maps) maps.push_back(m.to_field(pf));
  MultiPoly pull = pullback_hyperplane(maps, to_field_vec(hyperplane, pf));
  if (pull.is_zero()) throw std::runtime_error("hyperplane contains the curve (degenerate draw)");
  int d = static_cast<int>(curve.degree);
  std::vector<std::uint64_t> c = dehomog_coeffs(pull, d);
  int dg = -1;
  for (int i = d; i >= 0; --i)
    if (c[i] != 0) {
      dg = i;
      break;
    }
  SectionAccounting out;
  out.with_multiplicity = d - dg;  // zeros at the fiber (0 : 1)
  if (out.with_multiplicity > 0) {
    std::vector<Scalar> params{Scalar::zero(pf), Scalar::one(pf)};
    std::vector<Scalar> coords = eval_maps(maps, params);
    if (!all_zero(coords)) out.points.push_back(SamplePoint{ProjPoint(coords), params});
  }
  c.resize(dg + 1);
  ScanResult sr = scan_roots(std::move(c), p);
  for (const auto& [root, mult] : sr.roots) {
    out.with_multiplicity += mult;
    std::vector<Scalar> params{Scalar::one(pf), Scalar::residue(root, p)};
    std::vector<Scalar> coords = eval_maps(maps, params);
    if (!all_zero(coords)) out.points.push_back(SamplePoint{ProjPoint(coords), params});
  }
  out.with_multiplicity += sr.cofactor_degree;
  return out;
}

SectionAccounting scroll_full_section(const VarietyRep& scroll_var,
                                      const std::vector<std::vector<Scalar>>& hyperplanes,
                                      std::uint64_t p) {
  if (scroll_var.tag != ConstructionTag::Scroll)
    throw std::invalid_argument("scroll_full_section expects a scroll");
  const std::vector<int>& type = scroll_var.scroll->type;
  int m = static_cast<int>(type.size());
  if (static_cast<int>(hyperplanes.size()) != m)
    throw std::invalid_argument("need dim-many hyperplanes for a zero-dimensional section");
  Field pf = Field::prime(p);
  std::vector<MultiPoly> maps = scroll_maps(type, pf);

  // entry (k, i): the coefficient of u_i in the k-th restricted hyperplane,
  // a binary form in (s, t) of degree type[i]
  std::vector<std::vector<MultiPoly>> entries(m, std::vector<MultiPoly>());
  for (int k = 0; k < m; ++k) {
    MultiPoly pull = pullback_hyperplane(maps, to_field_vec(hyperplanes[k], pf));
    for (int i = 0; i < m; ++i) {
      MultiPoly coeff(2, pf);
      for (const auto& [mono, cs] : pull.terms()) {
        if (mono.e[2 + i] != 1) continue;
        Monomial bm = Monomial::unit(2);
        bm.e[0] = mono.e[0];
        bm.e[1] = mono.e[1];
        coeff.add_term(bm, cs);
      }
      entries[k].push_back(std::move(coeff));
    }
  }
  MultiPoly det = det_poly(entries);
  long long d = scroll_degree(type);
  if (det.is_zero())
    throw std::runtime_error("degenerate hyperplane draw: vanishing section determinant");

  std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& [mono, cs] : det.terms()) c[mono.e[1]] = cs.res();
  int dg = -1;
  for (long long i = d; i >= 0; --i)
    if (c[i] != 0) {
      dg = static_cast<int>(i);
      break;
    }

  auto fiber_point = [&](const Scalar& s0, const Scalar& t0) -> std::optional<SamplePoint> {
    ExactMatrix sys(0, m, pf);
    for (int k = 0; k < m; ++k) {
      std::vector<Scalar> row;
      for (int i = 0; i < m; ++i)
        row.push_back(entries[k][i].eval(std::vector<Scalar>{s0, t0}));
      sys.append_row(row);
    }
    std::vector<std::vector<Scalar>> ker = kernel_basis(sys);
    if (ker.empty()) return std::nullopt;
    std::vector<Scalar> params{s0, t0};
    params.insert(params.end(), ker.front().begin(), ker.front().end());
    std::vector<Scalar> coords = eval_maps(maps, params);
    if (all_zero(coords)) return std::nullopt;
    return SamplePoint{ProjPoint(coords), params};
  };

  SectionAccounting out;
  out.with_multiplicity = d - dg;
  if (out.with_multiplicity > 0) {
    if (auto sp = fiber_point(Scalar::zero(pf), Scalar::one(pf))) out.points.push_back(*sp);
  }
  c.resize(dg + 1);
  ScanResult sr = scan_roots(std::move(c), p);
  for (const auto& [root, mult] : sr.roots) {
    out.with_multiplicity += mult;
    if (auto sp = fiber_point(Scalar::one(pf), Scalar::residue(root, p)))
      out.points.push_back(*sp);
  }
  out.with_multiplicity += sr.cofactor_degree;
  return out;
}

std::vector<SamplePoint> sample_section_points(const VarietyRep& v,
                                               const std::vector<std::vector<Scalar>>& hyperplanes,
                                               int count, std::uint64_t p, Rng& rng) {
  Field pf = Field::prime(p);
  std::vector<SamplePoint> out;
  std::set<std::string> seen;
  auto push = [&](SamplePoint sp) {
    std::string key;
    for (const Scalar& s : sp.point.coords()) key += s.str() + ",";
    if (seen.insert(key).second) out.push_back(std::move(sp));
  };

  if (const Parametrization* par = v.parametrization(); par != nullptr && par->source_vars == 2) {
    if (hyperplanes.size() != 1)
      throw std::invalid_argument("curves take exactly one hyperplane");
    for (SamplePoint& sp : curve_hyperplane_section(v, hyperplanes.front(), p).points)
      push(std::move(sp));
    return out;
  }

  if (v.tag == ConstructionTag::Scroll) {
    const std::vector<int>& type = v.scroll->type;
    int m = static_cast<int>(type.size());
    int L = static_cast<int>(hyperplanes.size());
    if (L == m) {
      for (SamplePoint& sp : scroll_full_section(v, hyperplanes, p).points) push(std::move(sp));
      return out;
    }
    if (L > m) throw std::invalid_argument("section codimension exceeds the dimension");
    std::vector<MultiPoly> maps = scroll_maps(type, pf);
    std::vector<MultiPoly> pulls;
    for (const auto& h : hyperplanes) pulls.push_back(pullback_hyperplane(maps, to_field_vec(h, pf)));
    long long guard = 400ll * count + 500;
    while (static_cast<int>(out.size()) < count && guard-- > 0) {
      Scalar s0 = Scalar::one(pf), t0 = Scalar::residue(rng.below(p), p);
      ExactMatrix sys(0, m, pf);
      for (const MultiPoly& pull : pulls) {
        std::vector<Scalar> row(m, Scalar::zero(pf));
        for (const auto& [mono, cs] : pull.terms()) {
          Scalar val = cs;
          for (std::uint32_t k = 0; k < mono.e[0]; ++k) val *= s0;
          for (std::uint32_t k = 0; k < mono.e[1]; ++k) val *= t0;
          for (int i = 0; i < m; ++i)
            if (mono.e[2 + i] == 1) row[i] += val;
        }
        sys.append_row(row);
      }
      std::vector<std::vector<Scalar>> ker = kernel_basis(sys);
      if (ker.empty()) continue;
      // random point of the fiber solution space
      std::vector<Scalar> u(m, Scalar::zero(pf));
      for (const auto& kv : ker) {
        Scalar c = Scalar::residue(rng.below(p), p);
        for (int i = 0; i < m; ++i) u[i] += c * kv[i];
      }
      if (all_zero(u)) continue;
      std::vector<Scalar> params{s0, t0};
      params.insert(params.end(), u.begin(), u.end());
      std::vector<Scalar> coords = eval_maps(maps, params);
      if (all_zero(coords)) continue;
      push(SamplePoint{ProjPoint(coords), params});
    }
    return out;
  }

  if (v.is_scroll_divisor()) {
    const ScrollInfo& info = *v.scroll;
    int m = static_cast<int>(info.type.size());
    std::vector<MultiPoly> maps = scroll_maps(info.type, pf);
    MultiPoly G = info.form.to_field(pf);
    std::vector<MultiPoly> pulls;
    for (const auto& h : hyperplanes) pulls.push_back(pullback_hyperplane(maps, to_field_vec(h, pf)));
    // exhaustive in (s : t) over P^1(GF(p)): fiberwise, intersect the linear
    // conditions and scan the restricted divisor form on the solution space
    auto handle_fiber = [&](const Scalar& s0, const Scalar& t0) {
      ExactMatrix sys(0, m, pf);
      for (const MultiPoly& pull : pulls) {
        std::vector<Scalar> row(m, Scalar::zero(pf));
        for (const auto& [mono, cs] : pull.terms()) {
          Scalar val = cs;
          for (std::uint32_t k = 0; k < mono.e[0]; ++k) val *= s0;
          for (std::uint32_t k = 0; k < mono.e[1]; ++k) val *= t0;
          for (int i = 0; i < m; ++i)
            if (mono.e[2 + i] == 1) row[i] += val;
        }
        sys.append_row(row);
      }
      std::vector<std::vector<Scalar>> ker = kernel_basis(sys);
      if (ker.empty()) return;
      // G restricted to the fiber, then to the solution space of the
      // hyperplanes: a form in |ker| parameters
      MultiPoly fiber(m, pf);
      {
        MultiPoly tmp(m, pf);
        for (const auto& [mono, coef] : G.terms()) {
          Scalar c = coef;
          for (std::uint32_t k = 0; k < mono.e[0]; ++k) c *= s0;
          for (std::uint32_t k = 0; k < mono.e[1]; ++k) c *= t0;
          if (c.is_zero()) continue;
          Monomial um = Monomial::unit(m);
          for (int i = 0; i < m; ++i) um.e[i] = mono.e[2 + i];
          tmp.add_term(um, c);
        }
        fiber = std::move(tmp);
      }
      int kd = static_cast<int>(ker.size());
      std::vector<MultiPoly> images;
      for (int i = 0; i < m; ++i) {
        MultiPoly lin(kd, pf);
        for (int k = 0; k < kd; ++k) {
          if (ker[k][i].is_zero()) continue;
          Monomial mm = Monomial::unit(kd);
          mm.e[k] = 1;
          lin.add_term(mm, ker[k][i]);
        }
        images.push_back(std::move(lin));
      }
      MultiPoly restricted = fiber.is_zero() ? MultiPoly::zero(kd, pf) : substitute(fiber, images);
      auto emit = [&](const std::vector<Scalar>& lambda) {
        std::vector<Scalar> u(m, Scalar::zero(pf));
        for (int k = 0; k < kd; ++k)
          for (int i = 0; i < m; ++i) u[i] += lambda[k] * ker[k][i];
        if (all_zero(u)) return;
        std::vector<Scalar> params{s0, t0};
        params.insert(params.end(), u.begin(), u.end());
        std::vector<Scalar> coords = eval_maps(maps, params);
        if (!all_zero(coords)) push(SamplePoint{ProjPoint(coords), params});
      };
      if (restricted.is_zero()) {
        // whole solution space lies on the divisor; emit one random point
        std::vector<Scalar> lambda;
        for (int k = 0; k < kd; ++k) lambda.push_back(Scalar::residue(rng.below(p), p));
        emit(lambda);
        return;
      }
      if (kd == 1) {
        if (restricted.eval(std::vector<Scalar>{Scalar::one(pf)}).is_zero())
          emit({Scalar::one(pf)});
        return;
      }
      if (kd == 2) {
        // scan the projective line of solutions
        std::vector<std::uint64_t> cu(static_cast<std::size_t>(info.a) + 1, 0);
        for (const auto& [mono, cs] : restricted.terms()) cu[mono.e[1]] = cs.res();
        int top = static_cast<int>(info.a);
        int dgg = -1;
        for (int i = top; i >= 0; --i)
          if (cu[i] != 0) {
            dgg = i;
            break;
          }
        if (dgg < top) emit({Scalar::zero(pf), Scalar::one(pf)});
        cu.resize(dgg + 1);
        if (dgg >= 1)
          for (const auto& [root, mult] : scan_roots(std::move(cu), p).roots)
            emit({Scalar::one(pf), Scalar::residue(root, p)});
        return;
      }
      // kd >= 3: sample lines in the solution space
      for (int tries = 0; tries < 8; ++tries) {
        std::vector<Scalar> base, dir;
        for (int k = 0; k < kd; ++k) {
          base.push_back(Scalar::residue(rng.below(p), p));
          dir.push_back(Scalar::residue(rng.below(p), p));
        }
        std::vector<MultiPoly> line;
        for (int k = 0; k < kd; ++k) {
          MultiPoly lin(1, pf);
          lin.add_term(Monomial::unit(1), base[k]);
          Monomial w = Monomial::unit(1);
          w.e[0] = 1;
          lin.add_term(w, dir[k]);
          line.push_back(std::move(lin));
        }
        MultiPoly univ = substitute(restricted, line);
        if (univ.is_zero()) continue;
        for (const auto& [root, mult] : scan_roots(univ_coeffs_u64(univ), p).roots) {
          std::vector<Scalar> lambda;
          Scalar w = Scalar::residue(root, p);
          for (int k = 0; k < kd; ++k) lambda.push_back(base[k] + w * dir[k]);
          emit(lambda);
        }
        if (static_cast<int>(out.size()) >= count) break;
      }
    };
    if (static_cast<int>(hyperplanes.size()) >= v.dim) {
      // zero-dimensional expectation: walk every fiber
      for (std::uint64_t t = 0; t <= p; ++t) {
        Scalar s0 = t == p ? Scalar::zero(pf) : Scalar::one(pf);
        Scalar t0 = t == p ? Scalar::one(pf) : Scalar::residue(t, p);
        handle_fiber(s0, t0);
      }
    } else {
      long long guard = 200ll * count + 200;
      while (static_cast<int>(out.size()) < count && guard-- > 0)
        handle_fiber(Scalar::one(pf), Scalar::residue(rng.below(p), p));
    }
    return out;
  }

  if (const ImplicitCurve* ic = v.implicit_curve()) {
    if (hyperplanes.size() != 1)
      throw std::invalid_argument("curves take exactly one hyperplane");
    MultiPoly pull(2, pf);
    {
      std::vector<MultiPoly> basis;
      for (const MultiPoly& b : ic->section_basis) basis.push_back(b.to_field(pf));
      pull = pullback_hyperplane(basis, to_field_vec(hyperplanes.front(), pf));
    }
    MultiPoly repl = ic->relation.replacement.to_field(pf);
    // curve polynomial y^e - replacement as a dense array in y with
    // x-polynomial coefficients
    int e = ic->relation.lead_exp;
    auto coeffs_in_y = [&](const MultiPoly& q, int ymax) {
      std::vector<std::vector<std::uint64_t>> c(ymax + 1);
      for (auto& row : c) row.assign(static_cast<std::size_t>(std::max(0, q.degree_in(0))) + 1, 0);
      for (const auto& [mono, cs] : q.terms()) c[mono.e[1]][mono.e[0]] = cs.res();
      return c;
    };
    MultiPoly curve_poly = -repl;
    {
      Monomial ye = Monomial::unit(2);
      ye.e[1] = static_cast<std::uint32_t>(e);
      curve_poly.add_term(ye, Scalar::one(pf));
    }
    auto cc = coeffs_in_y(curve_poly, e);
    int hy = pull.is_zero() ? 0 : pull.degree_in(1);
    auto hc = coeffs_in_y(pull, hy);
    if (pull.is_zero()) throw std::runtime_error("hyperplane pulls back to zero");
    for (std::uint64_t x = 0; x < p; ++x) {
      // gcd in y of the two specializations picks the common roots
      std::vector<Scalar> a, b;
      for (const auto& row : cc) a.push_back(Scalar::residue(horner(row, x, p), p));
      for (const auto& row : hc) b.push_back(Scalar::residue(horner(row, x, p), p));
      if (univ_degree(b) < 0) continue;  // hyperplane vanishes identically on this x-line
      std::vector<Scalar> g = univ_gcd(a, b);
      int dg = univ_degree(g);
      if (dg < 1) continue;
      std::vector<std::uint64_t> gu;
      for (const Scalar& s : g) gu.push_back(s.res());
      for (const auto& [y, mult] : scan_roots(std::move(gu), p).roots) {
        std::vector<Scalar> pt{Scalar::residue(x, p), Scalar::residue(y, p)};
        std::vector<MultiPoly> basis;
        for (const MultiPoly& bb : ic->section_basis) basis.push_back(bb.to_field(pf));
        std::vector<Scalar> coords = eval_maps(basis, pt);
        if (!all_zero(coords)) push(SamplePoint{ProjPoint(coords), pt});
      }
      if (static_cast<int>(out.size()) >= count && count > 0) break;
    }
    return out;
  }

  throw std::invalid_argument("sample_section_points: unsupported representation");
}

VarietyRep random_linear_section(const VarietyRep& v, int codim, std::uint64_t seed,
                                 std::uint64_t scan_prime) {
  if (codim < 1 || codim > v.dim)
    throw std::invalid_argument("section codimension must lie in [1, dim]");
  Field pf = Field::prime(scan_prime);
  for (int attempt = 0; attempt < 12; ++attempt) {
    Rng rng(derive_seed(seed + attempt, "linear-section"));
    std::vector<std::vector<Scalar>> hyps;
    for (int k = 0; k < codim; ++k) {
      std::vector<Scalar> h;
      for (int i = 0; i <= v.ambient_dim; ++i)
        h.push_back(Scalar::of_int(Field::rationals(), rng.int_in(-9, 9)));
      bool nonzero = false;
      for (const Scalar& s : h) nonzero |= !s.is_zero();
      if (!nonzero) h[0] = Scalar::one(Field::rationals());
      hyps.push_back(std::move(h));
    }
    std::vector<SamplePoint> pts;
    try {
      pts = sample_section_points(v, hyps, 4 * v.ambient_dim + 20, scan_prime, rng);
    } catch (const std::runtime_error&) {
      continue;  // degenerate draw; retry with fresh hyperplanes
    }
    if (pts.empty()) continue;
    PointList pl;
    for (SamplePoint& sp : pts) {
      pl.points.push_back(std::move(sp.point));
      pl.params.push_back(std::move(sp.params));
    }
    VarietyRep out;
    out.tag = ConstructionTag::PointConfig;
    out.ambient_dim = v.ambient_dim;
    out.dim = v.dim - codim;
    out.codim = out.ambient_dim - out.dim;
    out.degree = v.degree;
    out.field = pf;
    out.rep = std::move(pl);
    out.seed = seed;
    out.construction = json{{"name", "random_linear_section"},
                            {"codim", codim},
                            {"seed", std::to_string(seed)},
                            {"attempt", attempt},
                            {"base", v.construction}};
    return out;
  }
  throw std::runtime_error("random_linear_section: empty section over the working field");
}

}  // namespace qs
