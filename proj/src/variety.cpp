#include "qs/variety.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qs {

std::string tag_name(ConstructionTag t) {
  switch (t) {
    case ConstructionTag::RNC: return "RNC";
    case ConstructionTag::Scroll: return "Scroll";
    case ConstructionTag::ScrollDivisor: return "ScrollDivisor";
    case ConstructionTag::EllipticNormal: return "EllipticNormal";
    case ConstructionTag::ProjectedElliptic: return "ProjectedElliptic";
    case ConstructionTag::RationalWithMSecant: return "RationalWithMSecant";
    case ConstructionTag::PlaneQuarticEmbedding: return "PlaneQuarticEmbedding";
    case ConstructionTag::PointConfig: return "PointConfig";
    case ConstructionTag::Projection: return "Projection";
    case ConstructionTag::Line: return "Line";
  }
  throw std::logic_error("unknown construction tag");
}

ConstructionTag tag_from_name(const std::string& name) {
  for (ConstructionTag t :
       {ConstructionTag::RNC, ConstructionTag::Scroll, ConstructionTag::ScrollDivisor,
        ConstructionTag::EllipticNormal, ConstructionTag::ProjectedElliptic,
        ConstructionTag::RationalWithMSecant, ConstructionTag::PlaneQuarticEmbedding,
        ConstructionTag::PointConfig, ConstructionTag::Projection, ConstructionTag::Line})
    if (tag_name(t) == name) return t;
  throw std::invalid_argument("unknown construction tag: " + name);
}

std::string VarietyRep::describe() const {
  std::string s = tag_name(tag) + " in P^" + std::to_string(ambient_dim) +
                  " (dim " + std::to_string(dim) + ", codim " + std::to_string(codim) +
                  ", degree " + std::to_string(degree);
  if (sectional_genus) s += ", g " + std::to_string(*sectional_genus);
  return s + ")";
}

// ---------------------------------------------------------------- helpers

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

std::string point_key(const ProjPoint& p) {
  std::string k;
  for (const Scalar& s : p.coords()) {
    k += s.str();
    k += ',';
  }
  return k;
}

// Random nonzero integer-box vector over f.
std::vector<Scalar> random_vector(int len, const Field& f, Rng& rng, long long box) {
  for (;;) {
    std::vector<Scalar> v;
    v.reserve(len);
    for (int i = 0; i < len; ++i) v.push_back(rng.scalar(f, box));
    if (!all_zero(v)) return v;
  }
}

MultiPoly binary_form_random(int degree, Rng& rng, long long box) {
  Field f = Field::rationals();
  MultiPoly p(2, f);
  for (int k = 0; k <= degree; ++k) {
    Monomial m = Monomial::unit(2);
    m.e[0] = static_cast<std::uint32_t>(degree - k);
    m.e[1] = static_cast<std::uint32_t>(k);
    p.add_term(m, rng.scalar(f, box));
  }
  return p;
}

}  // namespace

std::vector<MultiPoly> scroll_maps(const std::vector<int>& type, const Field& f) {
  int m = static_cast<int>(type.size());
  int nvars = 2 + m;
  std::vector<MultiPoly> maps;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= type[i]; ++j) {
      Monomial mono = Monomial::unit(nvars);
      mono.e[0] = static_cast<std::uint32_t>(type[i] - j);
      mono.e[1] = static_cast<std::uint32_t>(j);
      mono.e[2 + i] = 1;
      maps.push_back(MultiPoly::term(mono, Scalar::one(f)));
    }
  }
  return maps;
}

// ---------------------------------------------------------- membership

bool line_contains(const VarietyRep& line, const ProjPoint& p) {
  const Parametrization* par = line.parametrization();
  if (par == nullptr || line.dim != 1 || line.degree != 1)
    throw std::invalid_argument("line_contains expects a parametrized line");
  const Field& f = p.field();
  std::vector<MultiPoly> maps;
  maps.reserve(par->maps.size());
  for (const MultiPoly& m : par->maps) maps.push_back(m.to_field(f));
  std::vector<Scalar> s0{Scalar::one(f), Scalar::zero(f)};
  std::vector<Scalar> s1{Scalar::zero(f), Scalar::one(f)};
  std::vector<ProjPoint> pts{ProjPoint(eval_maps(maps, s0)), ProjPoint(eval_maps(maps, s1)), p};
  return span_dimension(pts) == 1;
}

bool scroll_contains(const std::vector<int>& type, const ProjPoint& p,
                     std::vector<Scalar>* params_out) {
  validate_scroll_type(type);
  if (p.ambient_dim() != scroll_ambient_dim(type))
    throw std::invalid_argument("point/scroll ambient mismatch");
  const Field& f = p.field();
  const std::vector<Scalar>& x = p.coords();
  int m = static_cast<int>(type.size());
  std::vector<int> offset(m);
  int off = 0;
  for (int i = 0; i < m; ++i) {
    offset[i] = off;
    off += type[i] + 1;
  }

  // candidate (s:t) values read from consecutive coordinate pairs
  std::vector<std::pair<Scalar, Scalar>> cand;
  cand.emplace_back(Scalar::one(f), Scalar::zero(f));
  cand.emplace_back(Scalar::zero(f), Scalar::one(f));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < type[i]; ++j) {
      const Scalar& a = x[offset[i] + j];
      const Scalar& b = x[offset[i] + j + 1];
      if (!a.is_zero() || !b.is_zero()) cand.emplace_back(a, b);
    }

  for (const auto& [s, t] : cand) {
    std::vector<Scalar> u;
    u.reserve(m);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      // fiber monomials s^(a_i-j) t^j
      std::vector<Scalar> mono(type[i] + 1, Scalar::one(f));
      for (int j = 0; j <= type[i]; ++j) {
        Scalar v = Scalar::one(f);
        for (int k = 0; k < type[i] - j; ++k) v *= s;
        for (int k = 0; k < j; ++k) v *= t;
        mono[j] = v;
      }
      int pivot = -1;
      for (int j = 0; j <= type[i]; ++j)
        if (!mono[j].is_zero()) {
          pivot = j;
          break;
        }
      if (pivot == -1) {
        ok = false;
        break;
      }
      Scalar ui = x[offset[i] + pivot] / mono[pivot];
      for (int j = 0; j <= type[i]; ++j)
        if (x[offset[i] + j] != ui * mono[j]) {
          ok = false;
          break;
        }
      u.push_back(ui);
    }
    if (ok) {
      if (params_out != nullptr) {
        params_out->clear();
        params_out->push_back(s);
        params_out->push_back(t);
        for (const Scalar& ui : u) params_out->push_back(ui);
      }
      return true;
    }
  }
  return false;
}

bool elliptic_native_contains(const VarietyRep& v, const ProjPoint& p) {
  const ImplicitCurve* ic = v.implicit_curve();
  if (ic == nullptr || v.tag != ConstructionTag::EllipticNormal)
    throw std::invalid_argument("elliptic_native_contains expects a native elliptic embedding");
  const Field& f = p.field();
  int mdeg = static_cast<int>(v.degree);  // c + 2
  const std::vector<Scalar>& q = p.coords();
  // native basis order: x^0..x^(m/2), then y*x^0..  (see constructor)
  int nx = mdeg / 2;  // max i with j = 0
  int idx_one = 0, idx_x = 1, idx_y = nx + 1;
  MultiPoly repl = ic->relation.replacement.to_field(f);
  if (!q[idx_one].is_zero()) {
    Scalar x = q[idx_x] / q[idx_one];
    Scalar y = q[idx_y] / q[idx_one];
    std::vector<Scalar> pt{x, y};
    if (y * y != repl.eval(pt)) return false;
    for (std::size_t k = 0; k < ic->section_basis.size(); ++k)
      if (q[k] != q[idx_one] * ic->section_basis[k].to_field(f).eval(pt)) return false;
    return true;
  }
  // only the image of the point at infinity has vanishing constant coordinate
  int idx_inf = (mdeg % 2 == 0) ? nx : static_cast<int>(ic->section_basis.size()) - 1;
  for (int k = 0; k < static_cast<int>(q.size()); ++k) {
    bool want_one = (k == idx_inf);
    if (want_one && !q[k].is_one()) return false;
    if (!want_one && !q[k].is_zero()) return false;
  }
  return true;
}

bool scroll_divisor_contains(const VarietyRep& divisor, const ProjPoint& p) {
  if (!divisor.is_scroll_divisor())
    throw std::invalid_argument("scroll_divisor_contains expects a scroll divisor");
  std::vector<Scalar> params;
  if (!scroll_contains(divisor.scroll->type, p, &params)) return false;
  return divisor.scroll->form.to_field(p.field()).eval(params).is_zero();
}

bool parametrization_base_point_free(const Parametrization& par) {
  if (par.source_vars != 2)
    throw std::invalid_argument("base-point check implemented for curve sources");
  int d = -1;
  for (const MultiPoly& m : par.maps)
    if (!m.is_zero()) d = std::max(d, m.total_degree());
  if (d < 0) return false;
  const Field& f = par.maps.front().field();
  std::vector<Scalar> g;  // running gcd of the dehomogenized forms
  int s_mult = d + 1;
  for (const MultiPoly& m : par.maps) {
    if (m.is_zero()) continue;
    std::vector<Scalar> c = binary_form_coeffs(m, d);
    int deg = univ_degree(c);
    s_mult = std::min(s_mult, d - deg);
    g = g.empty() ? c : univ_gcd(g, c);
  }
  if (s_mult >= 1) return false;        // common zero at (0 : 1)... s divides all
  return univ_degree(g) == 0;           // constant gcd <=> no common affine zero
}

// ------------------------------------------------------------ constructors

VarietyRep rational_normal_curve(int r) {
  if (r < 2) throw std::invalid_argument("rational_normal_curve needs r >= 2");
  Field f = Field::rationals();
  Parametrization par{2, {}};
  for (int i = 0; i <= r; ++i) {
    Monomial m = Monomial::unit(2);
    m.e[0] = static_cast<std::uint32_t>(r - i);
    m.e[1] = static_cast<std::uint32_t>(i);
    par.maps.push_back(MultiPoly::term(m, Scalar::one(f)));
  }
  VarietyRep v;
  v.tag = ConstructionTag::RNC;
  v.ambient_dim = r;
  v.dim = 1;
  v.codim = r - 1;
  v.degree = r;
  v.sectional_genus = 0;
  v.field = f;
  v.rep = std::move(par);
  v.construction = json{{"name", "rational_normal_curve"}, {"r", r}};
  return v;
}

VarietyRep scroll(const std::vector<int>& type) {
  validate_scroll_type(type);
  int L = static_cast<int>(type.size());
  if (L >= 2 && type[L - 2] < 1)
    throw std::invalid_argument("scroll needs a_n and a_{n+1} positive");
  Field f = Field::rationals();
  VarietyRep v;
  v.tag = ConstructionTag::Scroll;
  v.ambient_dim = scroll_ambient_dim(type);
  v.dim = L;
  v.codim = v.ambient_dim - v.dim;
  v.degree = scroll_degree(type);
  v.sectional_genus = 0;
  v.field = f;
  v.rep = Parametrization{2 + L, scroll_maps(type, f)};
  v.scroll = ScrollInfo{type, 0, 0, MultiPoly::zero(2 + L, f)};
  json jt = json::array();
  for (int a : type) jt.push_back(a);
  v.construction = json{{"name", "scroll"}, {"type", jt}};
  return v;
}

VarietyRep scroll_divisor_samples(const std::vector<int>& type, int a, long long b, int count,
                                  std::uint64_t seed, std::uint64_t scan_prime) {
  validate_scroll_type(type);
  if (a < 0) throw std::invalid_argument("divisor class needs a >= 0");
  if (a == 0 && b < 1)
    throw std::invalid_argument("fiber-union classes need b >= 1");
  ScrollDivisorClass cls(type, a, b);
  std::vector<Monomial> basis = divisor_monomial_basis(cls);
  if (basis.empty()) throw std::invalid_argument("ineffective class");

  Field f = Field::rationals();
  Rng frng(derive_seed(seed, "scroll-divisor-form"));
  int nvars = 2 + static_cast<int>(type.size());
  MultiPoly form(nvars, f);
  if (a == 0) {
    // fiber unions: draw a split form so every fiber of the zero scheme is
    // visible over the working field (each member splits over the closure)
    form = MultiPoly::constant(nvars, Scalar::one(f));
    std::set<long long> roots;
    while (static_cast<long long>(roots.size()) < b) roots.insert(frng.int_in(-40, 40));
    for (long long root : roots) {
      MultiPoly lin(nvars, f);
      Monomial ms = Monomial::unit(nvars), mt = Monomial::unit(nvars);
      ms.e[0] = 1;
      mt.e[1] = 1;
      lin.add_term(mt, Scalar::one(f));
      lin.add_term(ms, Scalar::of_int(f, -root));
      form = form * lin;
    }
  } else {
    while (form.is_zero())
      for (const Monomial& m : basis) form.add_term(m, frng.scalar(f, 10));
  }

  VarietyRep v;
  v.tag = ConstructionTag::ScrollDivisor;
  v.ambient_dim = scroll_ambient_dim(type);
  v.dim = static_cast<int>(type.size()) - 1;
  v.codim = v.ambient_dim - v.dim;
  v.degree = cls.degree();
  v.field = f;
  v.scroll = ScrollInfo{type, a, b, std::move(form)};
  v.seed = seed;
  v.rep = PointList{};
  json jt = json::array();
  for (int t : type) jt.push_back(t);
  v.construction = json{{"name", "scroll_divisor_samples"}, {"type", jt}, {"a", a},
                        {"b", b},     {"count", count},              {"seed", std::to_string(seed)}};

  Field sf = default_sample_field(v, scan_prime);
  Rng srng(derive_seed(seed, "scroll-divisor-points"));
  std::vector<SamplePoint> pts = sample_points(v, count, sf, srng);
  PointList pl;
  for (SamplePoint& sp : pts) {
    pl.points.push_back(std::move(sp.point));
    pl.params.push_back(std::move(sp.params));
  }
  v.rep = std::move(pl);
  return v;
}

VarietyRep elliptic_normal_curve(int c, const Scalar& A, const Scalar& B) {
  if (c < 2) throw std::invalid_argument("elliptic_normal_curve needs c >= 2");
  const Field& f = A.field();
  if (!(B.field() == f)) throw std::invalid_argument("A and B must share a field");
  Scalar four = Scalar::of_int(f, 4), twentyseven = Scalar::of_int(f, 27);
  if ((four * A * A * A + twentyseven * B * B).is_zero())
    throw std::invalid_argument("singular Weierstrass data: 4A^3 + 27B^2 = 0");

  int m = c + 2;
  // replacement x^3 + A x + B in the variables (x, y)
  MultiPoly repl(2, f);
  {
    Monomial x3 = Monomial::unit(2);
    x3.e[0] = 3;
    repl.add_term(x3, Scalar::one(f));
    Monomial x1 = Monomial::unit(2);
    x1.e[0] = 1;
    repl.add_term(x1, A);
    repl.add_term(Monomial::unit(2), B);
  }
  ImplicitCurve ic{Relation(1, 2, repl), {}};
  for (int j = 0; j <= 1; ++j)
    for (int i = 0; 2 * i + 3 * j <= m; ++i) {
      Monomial mono = Monomial::unit(2);
      mono.e[0] = static_cast<std::uint32_t>(i);
      mono.e[1] = static_cast<std::uint32_t>(j);
      ic.section_basis.push_back(MultiPoly::term(mono, Scalar::one(f)));
    }
  if (static_cast<int>(ic.section_basis.size()) != m)
    throw std::logic_error("Riemann-Roch count failed for the section basis");

  VarietyRep v;
  v.tag = ConstructionTag::EllipticNormal;
  v.ambient_dim = c + 1;
  v.dim = 1;
  v.codim = c;
  v.degree = m;
  v.sectional_genus = 1;
  v.field = f;
  v.rep = std::move(ic);
  v.construction =
      json{{"name", "elliptic_normal_curve"}, {"c", c}, {"A", A.str()}, {"B", B.str()}};
  return v;
}

VarietyRep projected_elliptic(int c, std::uint64_t seed, std::uint64_t scan_prime) {
  if (c < 2) throw std::invalid_argument("projected_elliptic needs c >= 2");
  Field f = Field::rationals();
  Rng rng(derive_seed(seed, "projected-elliptic"));
  Scalar A = Scalar::zero(f), B = Scalar::zero(f);
  for (;;) {
    A = rng.scalar(f, 9);
    B = rng.scalar(f, 9);
    Scalar disc = Scalar::of_int(f, 4) * A * A * A + Scalar::of_int(f, 27) * B * B;
    if (!disc.is_zero()) break;
  }
  VarietyRep base = elliptic_normal_curve(c + 1, A, B);

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Scalar> cc = random_vector(base.ambient_dim + 1, f, rng, 9);
    ProjPoint center(cc);
    if (elliptic_native_contains(base, center)) continue;
    VarietyRep proj = project_from_point(base, center);
    // collision scan: distinct affine parameters must keep distinct images
    Field sf = Field::prime(scan_prime);
    Rng srng(derive_seed(seed, "projected-elliptic-scan") + attempt);
    std::vector<SamplePoint> pts = sample_points(proj, 80, sf, srng);
    std::set<std::string> keys;
    bool collision = false;
    for (const SamplePoint& sp : pts)
      if (!keys.insert(point_key(sp.point)).second) {
        collision = true;
        break;
      }
    if (collision) continue;
    proj.tag = ConstructionTag::ProjectedElliptic;
    proj.sectional_genus = 1;
    json jc = json::array();
    for (const Scalar& s : center.coords()) jc.push_back(s.str());
    proj.construction = json{{"name", "projected_elliptic"},
                             {"c", c},
                             {"seed", std::to_string(seed)},
                             {"A", A.str()},
                             {"B", B.str()},
                             {"center", jc}};
    proj.seed = seed;
    return proj;
  }
  throw std::runtime_error("projected_elliptic: no valid center after bounded retries");
}

VarietyRep rational_curve_with_4secant(int c, std::uint64_t seed, std::uint64_t scan_prime) {
  if (c < 4) throw std::invalid_argument("rational_curve_with_4secant needs c >= 4");
  int d = c + 3;
  Field f = Field::rationals();
  Rng rng(derive_seed(seed, "4secant"));

  for (int attempt = 0; attempt < 64; ++attempt) {
    // four distinct secant parameters
    std::set<long long> tset;
    while (tset.size() < 4) tset.insert(rng.int_in(-8, 8));
    std::vector<long long> ts(tset.begin(), tset.end());
    MultiPoly q = MultiPoly::constant(2, Scalar::one(f));
    for (long long ti : ts) {
      MultiPoly lin(2, f);
      Monomial t_m = Monomial::unit(2);
      t_m.e[1] = 1;
      lin.add_term(t_m, Scalar::one(f));
      Monomial s_m = Monomial::unit(2);
      s_m.e[0] = 1;
      lin.add_term(s_m, Scalar::of_int(f, -ti));
      q = q * lin;
    }
    Parametrization par{2, {}};
    par.maps.push_back(binary_form_random(d, rng, 9));
    par.maps.push_back(binary_form_random(d, rng, 9));
    for (int j = 2; j <= c + 1; ++j) par.maps.push_back(q * binary_form_random(c - 1, rng, 9));

    if (!parametrization_base_point_free(par)) continue;

    // the four images must be defined and pairwise distinct on the line
    bool bad = false;
    std::vector<std::pair<Scalar, Scalar>> imgs;
    for (long long ti : ts) {
      std::vector<Scalar> pt{Scalar::one(f), Scalar::of_int(f, ti)};
      Scalar a0 = par.maps[0].eval(pt), a1 = par.maps[1].eval(pt);
      if (a0.is_zero() && a1.is_zero()) {
        bad = true;
        break;
      }
      for (const auto& [b0, b1] : imgs)
        if (a0 * b1 == a1 * b0) {
          bad = true;
          break;
        }
      if (bad) break;
      imgs.emplace_back(a0, a1);
    }
    if (bad) continue;

    // full span on deterministic parameters
    std::vector<ProjPoint> samples;
    for (int k = 0; k < 2 * (c + 2); ++k) {
      long long t = (k % 2 == 0) ? k / 2 + 9 : -(k / 2 + 9);  // avoid the secant params
      std::vector<Scalar> pt{Scalar::one(f), Scalar::of_int(f, t)};
      std::vector<Scalar> coords = eval_maps(par.maps, pt);
      if (all_zero(coords)) {
        bad = true;
        break;
      }
      samples.emplace_back(coords);
    }
    if (bad || span_dimension(samples) != c + 1) continue;

    // injectivity evidence: exhaustive over P^1(GF(p))
    {
      Field pf = Field::prime(scan_prime);
      std::vector<MultiPoly> maps_p;
      bool reducible = true;
      try {
        for (const MultiPoly& m : par.maps) maps_p.push_back(m.to_field(pf));
      } catch (const std::domain_error&) {
        reducible = false;  // coefficient denominator hit the prime; try again
      }
      if (!reducible) continue;
      std::set<std::string> keys;
      long long images = 0;
      bool collision = false;
      for (std::uint64_t t = 0; t <= scan_prime && !collision; ++t) {
        std::vector<Scalar> pt = (t == scan_prime)
                                     ? std::vector<Scalar>{Scalar::residue(0, scan_prime),
                                                           Scalar::residue(1, scan_prime)}
                                     : std::vector<Scalar>{Scalar::residue(1, scan_prime),
                                                           Scalar::residue(t, scan_prime)};
        std::vector<Scalar> coords = eval_maps(maps_p, pt);
        if (all_zero(coords)) continue;
        ++images;
        if (!keys.insert(point_key(ProjPoint(coords))).second) collision = true;
      }
      if (collision || images == 0) continue;
    }

    VarietyRep v;
    v.tag = ConstructionTag::RationalWithMSecant;
    v.ambient_dim = c + 1;
    v.dim = 1;
    v.codim = c;
    v.degree = d;
    v.sectional_genus = 0;
    v.field = f;
    v.rep = std::move(par);
    v.seed = seed;
    json jts = json::array();
    for (long long ti : ts) jts.push_back(ti);
    v.construction = json{{"name", "rational_curve_with_4secant"},
                          {"c", c},
                          {"seed", std::to_string(seed)},
                          {"secantParams", jts}};
    return v;
  }
  throw std::runtime_error("rational_curve_with_4secant: degenerate draws exhausted retries");
}

namespace {

MultiPoly homogenize3(const MultiPoly& affine, int degree) {
  // (x, y) -> (x, y, z) with total degree `degree`
  MultiPoly out(3, affine.field());
  for (const auto& [m, c] : affine.terms()) {
    int td = m.degree();
    if (td > degree) throw std::invalid_argument("affine degree exceeds homogenization degree");
    Monomial h = Monomial::unit(3);
    h.e[0] = m.e[0];
    h.e[1] = m.e[1];
    h.e[2] = static_cast<std::uint32_t>(degree - td);
    out.add_term(h, c);
  }
  return out;
}

MultiPoly dehomogenize3(const MultiPoly& form) {
  // (x, y, z) -> (x, y) at z = 1
  MultiPoly out(2, form.field());
  for (const auto& [m, c] : form.terms()) {
    Monomial a = Monomial::unit(2);
    a.e[0] = m.e[0];
    a.e[1] = m.e[1];
    out.add_term(a, c);
  }
  return out;
}

}  // namespace

VarietyRep plane_quartic_embedding(int c, std::uint64_t seed, std::uint64_t scan_prime) {
  if (c != 4 && c != 5)
    throw std::invalid_argument("plane_quartic_embedding supports c = 4 and c = 5");
  Field f = Field::rationals();
  Rng rng(derive_seed(seed, "plane-quartic"));

  for (int attempt = 0; attempt < 64; ++attempt) {
    // monic-in-y^4 affine quartic
    MultiPoly fa(2, f);
    {
      Monomial y4 = Monomial::unit(2);
      y4.e[1] = 4;
      fa.add_term(y4, Scalar::one(f));
    }
    long long c30 = 0, c40 = 0;
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 3 && i + j <= 4; ++j) {
        long long coeff = rng.int_in(-6, 6);
        if (c == 5 && j == 0) {
          // force (0,0), (1,0), (-1,0) onto the curve: f(x,0) = c30*(x^3-x) + c40*(x^4-x^2)
          if (i == 0) coeff = 0;
          if (i == 3) c30 = coeff;
          if (i == 4) c40 = coeff;
          if (i == 1) continue;  // filled below
          if (i == 2) continue;
        }
        Monomial m = Monomial::unit(2);
        m.e[0] = static_cast<std::uint32_t>(i);
        m.e[1] = static_cast<std::uint32_t>(j);
        fa.add_term(m, Scalar::of_int(f, coeff));
      }
    if (c == 5) {
      Monomial x1 = Monomial::unit(2);
      x1.e[0] = 1;
      fa.add_term(x1, Scalar::of_int(f, -c30));
      Monomial x2 = Monomial::unit(2);
      x2.e[0] = 2;
      fa.add_term(x2, Scalar::of_int(f, -c40));
    }

    MultiPoly F = homogenize3(fa, 4);

    // smoothness evidence: restrictions to random lines stay squarefree
    bool good = true;
    for (int line = 0; line < 12 && good; ++line) {
      std::vector<Scalar> P = random_vector(3, f, rng, 7);
      std::vector<Scalar> Q = random_vector(3, f, rng, 7);
      std::vector<MultiPoly> images;
      for (int k = 0; k < 3; ++k) {
        MultiPoly lin(2, f);
        Monomial lm = Monomial::unit(2);
        lm.e[0] = 1;
        lin.add_term(lm, P[k]);
        Monomial mm = Monomial::unit(2);
        mm.e[1] = 1;
        lin.add_term(mm, Q[k]);
        images.push_back(std::move(lin));
      }
      MultiPoly g = substitute(F, images);
      if (g.is_zero() || g.total_degree() != 4) {
        good = false;
        break;
      }
      std::vector<Scalar> gc = binary_form_coeffs(g, 4);
      std::vector<Scalar> dgc(4 + 1, Scalar::zero(f));
      for (int k = 1; k <= 4; ++k) dgc[k - 1] = gc[k] * Scalar::of_int(f, k);
      dgc.resize(4);
      if (univ_degree(univ_gcd(gc, dgc)) != 0) good = false;  // repeated root on this line
    }
    if (!good) continue;

    // gradient must not vanish at the three base points (c = 5)
    if (c == 5) {
      MultiPoly fx(2, f), fy(2, f);
      for (const auto& [m, cf] : fa.terms()) {
        if (m.e[0] > 0) {
          Monomial dm = m;
          dm.e[0] -= 1;
          fx.add_term(dm, cf * Scalar::of_int(f, m.e[0]));
        }
        if (m.e[1] > 0) {
          Monomial dm = m;
          dm.e[1] -= 1;
          fy.add_term(dm, cf * Scalar::of_int(f, m.e[1]));
        }
      }
      bool singular = false;
      for (long long x0 : {0ll, 1ll, -1ll}) {
        std::vector<Scalar> pt{Scalar::of_int(f, x0), Scalar::zero(f)};
        if (fx.eval(pt).is_zero() && fy.eval(pt).is_zero()) singular = true;
      }
      if (singular) continue;
    }

    // embedding coordinates
    std::vector<MultiPoly> coords;
    if (c == 4) {
      for (const Monomial& m : monomials_of_degree(3, 2))
        coords.push_back(dehomogenize3(MultiPoly::term(m, Scalar::one(f))));
    } else {
      std::vector<Monomial> cubics = monomials_of_degree(3, 3);
      ExactMatrix conds(0, static_cast<int>(cubics.size()), f);
      for (long long x0 : {0ll, 1ll, -1ll}) {
        std::vector<Scalar> pt{Scalar::of_int(f, x0), Scalar::zero(f), Scalar::one(f)};
        std::vector<Scalar> row;
        row.reserve(cubics.size());
        for (const Monomial& m : cubics)
          row.push_back(MultiPoly::term(m, Scalar::one(f)).eval(pt));
        conds.append_row(row);
      }
      for (const std::vector<Scalar>& v : kernel_basis(conds)) {
        MultiPoly cubic(3, f);
        for (std::size_t k = 0; k < cubics.size(); ++k) cubic.add_term(cubics[k], v[k]);
        coords.push_back(dehomogenize3(cubic));
      }
      if (coords.size() != 7) continue;
    }

    // relation y^4 -> y^4 - f  (replacement with y-degree <= 3)
    MultiPoly repl(2, f);
    {
      Monomial y4 = Monomial::unit(2);
      y4.e[1] = 4;
      repl = MultiPoly::term(y4, Scalar::one(f)) - fa;
    }

    VarietyRep v;
    v.tag = ConstructionTag::PlaneQuarticEmbedding;
    v.ambient_dim = c + 1;
    v.dim = 1;
    v.codim = c;
    v.degree = c + 4;
    v.sectional_genus = 3;
    v.field = f;
    v.rep = ImplicitCurve{Relation(1, 4, std::move(repl)), std::move(coords)};
    v.seed = seed;
    v.construction = json{{"name", "plane_quartic_embedding"},
                          {"c", c},
                          {"seed", std::to_string(seed)},
                          {"quartic", fa.str()}};

    // the image has to span the ambient space
    Field sf = Field::prime(scan_prime);
    Rng srng(derive_seed(seed, "plane-quartic-span") + attempt);
    std::vector<SamplePoint> pts = sample_points(v, 3 * (c + 2), sf, srng);
    std::vector<ProjPoint> raw;
    raw.reserve(pts.size());
    for (const SamplePoint& sp : pts) raw.push_back(sp.point);
    if (span_dimension(raw) != v.ambient_dim) continue;
    return v;
  }
  throw std::runtime_error("plane_quartic_embedding: degenerate draws exhausted retries");
}

VarietyRep point_config_on_rnc(int c, int m, std::uint64_t seed) {
  if (m < c + 1) throw std::invalid_argument("point_config_on_rnc needs m >= c + 1");
  Field f = Field::rationals();
  Rng rng(derive_seed(seed, "point-config"));
  std::set<long long> tset;
  while (static_cast<int>(tset.size()) < m) tset.insert(rng.int_in(-5ll * m, 5ll * m));
  PointList pl;
  for (long long t : tset) {
    std::vector<Scalar> coords;
    Scalar acc = Scalar::one(f), tv = Scalar::of_int(f, t);
    for (int i = 0; i <= c; ++i) {
      coords.push_back(acc);
      acc *= tv;
    }
    pl.points.emplace_back(coords);
    pl.params.push_back({Scalar::one(f), tv});
  }
  VarietyRep v;
  v.tag = ConstructionTag::PointConfig;
  v.ambient_dim = c;
  v.dim = 0;
  v.codim = c;
  v.degree = m;
  v.field = f;
  v.rep = std::move(pl);
  v.seed = seed;
  v.construction =
      json{{"name", "point_config_on_rnc"}, {"c", c}, {"m", m}, {"seed", std::to_string(seed)}};
  return v;
}

VarietyRep coordinate_line(int r) {
  if (r < 1) throw std::invalid_argument("coordinate_line needs r >= 1");
  Field f = Field::rationals();
  Parametrization par{2, {}};
  par.maps.push_back(MultiPoly::variable(2, 0, f));
  par.maps.push_back(MultiPoly::variable(2, 1, f));
  for (int i = 2; i <= r; ++i) par.maps.push_back(MultiPoly::zero(2, f));
  VarietyRep v;
  v.tag = ConstructionTag::Line;
  v.ambient_dim = r;
  v.dim = 1;
  v.codim = r - 1;
  v.degree = 1;
  v.sectional_genus = 0;
  v.field = f;
  v.rep = std::move(par);
  v.construction = json{{"name", "coordinate_line"}, {"r", r}};
  return v;
}

VarietyRep ambient_points(int r, int count, std::uint64_t seed, const Field& f) {
  Rng rng(derive_seed(seed, "ambient-points"));
  PointList pl;
  std::set<std::string> keys;
  while (static_cast<int>(pl.points.size()) < count) {
    ProjPoint p(random_vector(r + 1, f, rng, 50));
    if (keys.insert(point_key(p)).second) pl.points.push_back(std::move(p));
  }
  VarietyRep v;
  v.tag = ConstructionTag::PointConfig;
  v.ambient_dim = r;
  v.dim = 0;
  v.codim = r;
  v.degree = count;
  v.field = f;
  v.rep = std::move(pl);
  v.seed = seed;
  v.construction = json{{"name", "ambient_points"},
                        {"r", r},
                        {"count", count},
                        {"seed", std::to_string(seed)},
                        {"field", f.describe()}};
  return v;
}

VarietyRep project_from_point(const VarietyRep& v, const ProjPoint& center) {
  if (center.ambient_dim() != v.ambient_dim)
    throw std::invalid_argument("projection center in the wrong ambient space");
  LinearProjection proj = LinearProjection::from_center(center);

  VarietyRep out = v;
  out.tag = ConstructionTag::Projection;
  out.ambient_dim = v.ambient_dim - 1;
  out.codim = v.codim - 1;
  out.scroll.reset();
  json jc = json::array();
  for (const Scalar& s : center.coords()) jc.push_back(s.str());
  out.construction =
      json{{"name", "project_from_point"}, {"center", jc}, {"base", v.construction}};

  if (const Parametrization* par = v.parametrization()) {
    bool on_variety;
    if (par->source_vars == 2) {
      // exact: common zero of the 2x2 minors phi_i * c_j - phi_j * c_i
      Parametrization minors{2, {}};
      const std::vector<Scalar>& cc = center.coords();
      for (std::size_t i = 0; i < par->maps.size(); ++i)
        for (std::size_t j = i + 1; j < par->maps.size(); ++j) {
          MultiPoly h = par->maps[i].scaled(cc[j].to_field(v.field)) -
                        par->maps[j].scaled(cc[i].to_field(v.field));
          if (!h.is_zero()) minors.maps.push_back(std::move(h));
        }
      on_variety = minors.maps.empty() || !parametrization_base_point_free(minors);
    } else if (v.scroll.has_value()) {
      on_variety = scroll_contains(v.scroll->type, center);
    } else {
      throw std::invalid_argument("projection of this parametrization kind is unsupported");
    }
    if (on_variety) throw std::domain_error("projection center lies on the variety");
    Parametrization np{par->source_vars, proj.compose(par->maps)};
    out.rep = std::move(np);
    return out;
  }
  if (const ImplicitCurve* ic = v.implicit_curve()) {
    if (v.tag != ConstructionTag::EllipticNormal)
      throw std::invalid_argument("projection is supported for native elliptic embeddings only");
    if (elliptic_native_contains(v, center))
      throw std::domain_error("projection center lies on the variety");
    ImplicitCurve nc{ic->relation, proj.compose(ic->section_basis)};
    out.rep = std::move(nc);
    return out;
  }
  const PointList* pl = v.point_list();
  PointList np;
  np.params = pl->params;
  for (const ProjPoint& p : pl->points) np.points.push_back(proj.apply(p));
  out.rep = std::move(np);
  return out;
}

// ---------------------------------------------------------------- sampling

Field default_sample_field(const VarietyRep& v, std::uint64_t scan_prime) {
  if (v.implicit_curve() != nullptr) return Field::prime(scan_prime);
  if (v.is_scroll_divisor() && v.scroll->a != 1) return Field::prime(scan_prime);
  return v.field;
}

namespace {

// Collapse a prime-field univariate MultiPoly to dense uint64 coefficients.
std::vector<std::uint64_t> univ_coeffs_u64(const MultiPoly& p) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(std::max(0, p.degree_in(0))) + 1, 0);
  for (const auto& [m, s] : p.terms()) c[m.e[0]] = s.res();
  return c;
}

std::uint64_t horner(const std::vector<std::uint64_t>& c, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), c[i], p);
  return acc;
}

// Rational roots with multiplicity (by exact deflation) plus the degree of
// the remaining cofactor: together they account for deg(f) closure roots.
struct ScanResult {
  std::vector<std::pair<std::uint64_t, int>> roots;
  int cofactor_degree = 0;
};

ScanResult scan_roots(std::vector<std::uint64_t> c, std::uint64_t p) {
  ScanResult out;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::invalid_argument("root scan of the zero polynomial");
  for (std::uint64_t x = 0; x < p && c.size() > 1; ++x) {
    int mult = 0;
    while (c.size() > 1 && horner(c, x, p) == 0) {
      // synthetic division by (t - x)
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

// Restrict a polynomial in (s, t, u_1..u_m) at fixed (s0, t0).
MultiPoly restrict_st(const MultiPoly& g, const Scalar& s0, const Scalar& t0) {
  int m = g.nvars() - 2;
  const Field& f = g.field();
  MultiPoly out(m, f);
  for (const auto& [mono, coef] : g.terms()) {
    Scalar c = coef;
    for (std::uint32_t k = 0; k < mono.e[0]; ++k) c *= s0;
    for (std::uint32_t k = 0; k < mono.e[1]; ++k) c *= t0;
    if (c.is_zero()) continue;
    Monomial um = Monomial::unit(m);
    for (int i = 0; i < m; ++i) um.e[i] = mono.e[2 + i];
    out.add_term(um, c);
  }
  return out;
}

struct Dedupe {
  std::set<std::string> seen;
  bool insert(const ProjPoint& p) { return seen.insert(point_key(p)).second; }
};

void sample_parametrization(const VarietyRep& v, const Parametrization& par, int count,
                            const Field& sf, Rng& rng, std::vector<SamplePoint>& out) {
  std::vector<MultiPoly> maps;
  maps.reserve(par.maps.size());
  for (const MultiPoly& m : par.maps) maps.push_back(m.to_field(sf));
  Dedupe dd;
  long long box = std::max<long long>(50, 6ll * count);
  long long guard = 400ll * count + 1000;
  while (static_cast<int>(out.size()) < count && guard-- > 0) {
    std::vector<Scalar> params;
    if (par.source_vars == 2) {
      params = {Scalar::one(sf), rng.scalar(sf, box)};
    } else {
      bool infinity_fiber = rng.below(64) == 0;
      params.push_back(infinity_fiber ? Scalar::zero(sf) : Scalar::one(sf));
      params.push_back(infinity_fiber ? Scalar::one(sf) : rng.scalar(sf, box));
      std::vector<Scalar> u = random_vector(par.source_vars - 2, sf, rng, box);
      params.insert(params.end(), u.begin(), u.end());
    }
    std::vector<Scalar> coords = eval_maps(maps, params);
    if (all_zero(coords)) continue;
    ProjPoint p(std::move(coords));
    if (!dd.insert(p)) continue;
    out.push_back(SamplePoint{std::move(p), std::move(params)});
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error("parametrization sampling stalled");
}

void sample_implicit(const VarietyRep& v, const ImplicitCurve& ic, int count, const Field& sf,
                     Rng& rng, std::vector<SamplePoint>& out) {
  if (!sf.is_prime_field())
    throw std::invalid_argument(
        "implicit curves are sampled over a prime field; choose prime:p");
  std::uint64_t p = sf.modulus;
  MultiPoly repl = ic.relation.replacement.to_field(sf);
  std::vector<MultiPoly> basis;
  basis.reserve(ic.section_basis.size());
  for (const MultiPoly& b : ic.section_basis) basis.push_back(b.to_field(sf));
  Dedupe dd;
  long long guard = 400ll * count + 1000;
  while (static_cast<int>(out.size()) < count && guard-- > 0) {
    std::uint64_t x = rng.below(p);
    Scalar xs = Scalar::residue(x, p);
    std::vector<std::uint64_t> ys;
    if (ic.relation.lead_exp == 2) {
      // y^2 = replacement(x), replacement free of y
      std::vector<Scalar> pt{xs, Scalar::zero(sf)};
      std::uint64_t rhs = repl.eval(pt).res();
      std::optional<std::uint64_t> y = sqrt_mod(rhs, p);
      if (!y) continue;
      ys.push_back(*y);
      if (*y != neg_mod(*y, p)) ys.push_back(neg_mod(*y, p));
    } else {
      // y^lead_exp = replacement(x, y): scan the monic univariate in y
      std::vector<std::uint64_t> c(static_cast<std::size_t>(ic.relation.lead_exp) + 1, 0);
      c[ic.relation.lead_exp] = 1;
      for (const auto& [m, coef] : repl.terms()) {
        std::uint64_t val = mul_mod(coef.res(), pow_mod(x, m.e[0], p), p);
        c[m.e[1]] = sub_mod(c[m.e[1]], val, p);
      }
      for (std::uint64_t y = 0; y < p; ++y)
        if (horner(c, y, p) == 0) ys.push_back(y);
      if (ys.empty()) continue;
    }
    std::uint64_t y = ys[rng.below(ys.size())];
    std::vector<Scalar> pt{xs, Scalar::residue(y, p)};
    std::vector<Scalar> coords = eval_maps(basis, pt);
    if (all_zero(coords)) continue;  // base points of an incomplete system
    ProjPoint pp(std::move(coords));
    if (!dd.insert(pp)) continue;
    out.push_back(SamplePoint{std::move(pp), pt});
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error("implicit-curve sampling stalled");
}

void sample_scroll_divisor(const VarietyRep& v, int count, const Field& sf, Rng& rng,
                           std::vector<SamplePoint>& out) {
  const ScrollInfo& info = *v.scroll;
  int m = static_cast<int>(info.type.size());
  MultiPoly G = info.form.to_field(sf);
  std::vector<MultiPoly> maps = scroll_maps(info.type, sf);
  Dedupe dd;
  long long box = std::max<long long>(50, 6ll * count);
  long long guard = 600ll * count + 2000;

  if (info.a == 0) {
    if (!sf.is_prime_field())
      throw std::invalid_argument("fiber-union sampling needs a prime field");
    std::uint64_t p = sf.modulus;
    // G is a binary form in (s, t); collect its rational fibers
    MultiPoly g1(1, sf);
    for (const auto& [mono, coef] : G.terms()) {
      Monomial um = Monomial::unit(1);
      um.e[0] = mono.e[1];
      g1.add_term(um, coef);
    }
    ScanResult sr = scan_roots(univ_coeffs_u64(g1), p);
    std::vector<std::pair<Scalar, Scalar>> fibers;
    for (const auto& [root, mult] : sr.roots)
      fibers.emplace_back(Scalar::one(sf), Scalar::residue(root, p));
    if (g1.degree_in(0) < static_cast<int>(info.b))
      fibers.emplace_back(Scalar::zero(sf), Scalar::one(sf));  // fiber over (0 : 1)
    if (fibers.empty()) throw std::runtime_error("no rational fiber for the a = 0 class");
    while (static_cast<int>(out.size()) < count && guard-- > 0) {
      const auto& [s0, t0] = fibers[rng.below(fibers.size())];
      std::vector<Scalar> params{s0, t0};
      std::vector<Scalar> u = random_vector(m, sf, rng, box);
      params.insert(params.end(), u.begin(), u.end());
      std::vector<Scalar> coords = eval_maps(maps, params);
      if (all_zero(coords)) continue;
      ProjPoint pp(std::move(coords));
      if (!dd.insert(pp)) continue;
      out.push_back(SamplePoint{std::move(pp), std::move(params)});
    }
    if (static_cast<int>(out.size()) < count)
      throw std::runtime_error("fiber-union sampling stalled");
    return;
  }

  if (info.a >= 2 && !sf.is_prime_field())
    throw std::invalid_argument("divisor classes with a >= 2 are sampled over a prime field");

  while (static_cast<int>(out.size()) < count && guard-- > 0) {
    bool infinity_fiber = rng.below(64) == 0;
    Scalar s0 = infinity_fiber ? Scalar::zero(sf) : Scalar::one(sf);
    Scalar t0 = infinity_fiber ? Scalar::one(sf) : rng.scalar(sf, box);
    MultiPoly fiber = restrict_st(G, s0, t0);
    std::vector<Scalar> u;
    if (fiber.is_zero()) {
      u = random_vector(m, sf, rng, box);
    } else if (info.a == 1) {
      // linear fiber form: solve for the first variable with nonzero coefficient
      std::vector<Scalar> ell(m, Scalar::zero(sf));
      for (const auto& [mono, coef] : fiber.terms())
        for (int i = 0; i < m; ++i)
          if (mono.e[i] == 1) ell[i] = coef;
      int j = -1;
      for (int i = 0; i < m; ++i)
        if (!ell[i].is_zero()) {
          j = i;
          break;
        }
      if (j == -1) continue;
      u.assign(m, Scalar::zero(sf));
      Scalar acc = Scalar::zero(sf);
      for (int i = 0; i < m; ++i) {
        if (i == j) continue;
        u[i] = rng.scalar(sf, box);
        acc += ell[i] * u[i];
      }
      u[j] = -acc / ell[j];
      if (all_zero(u)) continue;
    } else {
      // restrict to a random line u = base + w * dir and scan the univariate
      std::uint64_t p = sf.modulus;
      std::vector<Scalar> base = random_vector(m, sf, rng, box);
      std::vector<Scalar> dir = random_vector(m, sf, rng, box);
      std::vector<MultiPoly> images;
      images.reserve(m);
      for (int i = 0; i < m; ++i) {
        MultiPoly lin(1, sf);
        lin.add_term(Monomial::unit(1), base[i]);
        Monomial w = Monomial::unit(1);
        w.e[0] = 1;
        lin.add_term(w, dir[i]);
        images.push_back(std::move(lin));
      }
      MultiPoly restricted = substitute(fiber, images);
      if (restricted.is_zero()) {
        u = base;  // the whole line lies on the divisor
      } else {
        ScanResult sr = scan_roots(univ_coeffs_u64(restricted), p);
        if (sr.roots.empty()) continue;
        std::uint64_t w = sr.roots[rng.below(sr.roots.size())].first;
        Scalar ws = Scalar::residue(w, p);
        u.clear();
        for (int i = 0; i < m; ++i) u.push_back(base[i] + ws * dir[i]);
        if (all_zero(u)) continue;
      }
    }
    std::vector<Scalar> params{s0, t0};
    params.insert(params.end(), u.begin(), u.end());
    if (!fiber.is_zero() && !fiber.eval(u).is_zero())
      throw std::logic_error("fiber solve produced a point off the divisor");
    std::vector<Scalar> coords = eval_maps(maps, params);
    if (all_zero(coords)) continue;
    ProjPoint pp(std::move(coords));
    if (!dd.insert(pp)) continue;
    out.push_back(SamplePoint{std::move(pp), std::move(params)});
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error("scroll-divisor sampling stalled");
}

}  // namespace

std::vector<SamplePoint> sample_points(const VarietyRep& v, int count, const Field& sample_field,
                                       Rng& rng) {
  std::vector<SamplePoint> out;
  if (const Parametrization* par = v.parametrization()) {
    sample_parametrization(v, *par, count, sample_field, rng, out);
    return out;
  }
  if (const ImplicitCurve* ic = v.implicit_curve()) {
    sample_implicit(v, *ic, count, sample_field, rng, out);
    return out;
  }
  if (v.is_scroll_divisor()) {
    sample_scroll_divisor(v, count, sample_field, rng, out);
    return out;
  }
  // fixed point list: return the stored points, converted if needed
  const PointList* pl = v.point_list();
  for (std::size_t i = 0; i < pl->points.size(); ++i) {
    std::vector<Scalar> coords;
    for (const Scalar& s : pl->points[i].coords()) coords.push_back(s.to_field(sample_field));
    std::vector<Scalar> params;
    if (i < pl->params.size())
      for (const Scalar& s : pl->params[i]) params.push_back(s.to_field(sample_field));
    out.push_back(SamplePoint{ProjPoint(std::move(coords)), std::move(params)});
  }
  return out;
}

}  // namespace qs
