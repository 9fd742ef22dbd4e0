#include "qs/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qs {

ProjPoint::ProjPoint(std::vector<Scalar> coords) : c_(std::move(coords)) {
  if (c_.empty()) throw std::invalid_argument("projective point needs coordinates");
  const Field& f = c_.front().field();
  int first = -1;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (!(c_[i].field() == f)) throw std::invalid_argument("mixed-field coordinates");
    if (first == -1 && !c_[i].is_zero()) first = i;
  }
  if (first == -1) throw std::invalid_argument("the zero vector is not a projective point");
  Scalar inv = c_[first].inverse();
  for (Scalar& s : c_) s *= inv;
}

std::string ProjPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += " : ";
    out += c_[i].str();
  }
  return out + ")";
}

int span_dimension(std::span<const ProjPoint> points) {
  if (points.empty()) return -1;
  int r = points.front().ambient_dim();
  const Field& f = points.front().field();
  ExactMatrix m(0, r + 1, f);
  for (const ProjPoint& p : points) {
    if (p.ambient_dim() != r) throw std::invalid_argument("points in different ambients");
    m.append_row(p.coords());
  }
  return rank(m) - 1;
}

bool general_position_check(std::span<const ProjPoint> points, long long trials,
                            std::uint64_t seed) {
  if (points.empty()) throw std::invalid_argument("general_position_check on empty list");
  int r = points.front().ambient_dim();
  int k = r + 1;
  int m = static_cast<int>(points.size());
  if (m < k) throw std::invalid_argument("need at least ambientDim+1 points");

  auto full = [&](const std::vector<int>& idx) {
    std::vector<ProjPoint> sub;
    sub.reserve(idx.size());
    for (int i : idx) sub.push_back(points[i]);
    return span_dimension(sub) == r;
  };

  // subset count C(m, k), saturating
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count = count * (m - i) / (i + 1);
    if (count > trials) break;
  }
  if (count <= trials) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      if (!full(idx)) return false;
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
  }

  Rng rng(seed);
  for (long long t = 0; t < trials; ++t) {
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < k)
      chosen.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
    std::vector<int> idx(chosen.begin(), chosen.end());
    if (!full(idx)) return false;
  }
  return true;
}

LinearProjection LinearProjection::from_center(const ProjPoint& center) {
  int r = center.ambient_dim();
  const Field& f = center.field();
  ExactMatrix row(0, r + 1, f);
  row.append_row(center.coords());
  std::vector<std::vector<Scalar>> ker = kernel_basis(row);
  if (static_cast<int>(ker.size()) != r)
    throw std::logic_error("projection matrix construction failed");
  ExactMatrix m(0, r + 1, f);
  for (const auto& v : ker) m.append_row(v);
  return LinearProjection(center, std::move(m));
}

ProjPoint LinearProjection::apply(const ProjPoint& p) const {
  std::vector<Scalar> image = m_.multiply(p.coords());
  bool all_zero = true;
  for (const Scalar& s : image)
    if (!s.is_zero()) {
      all_zero = false;
      break;
    }
  if (all_zero) throw std::domain_error("projection is not defined at its center");
  return ProjPoint(std::move(image));
}

std::vector<MultiPoly> LinearProjection::compose(std::span<const MultiPoly> maps) const {
  if (static_cast<int>(maps.size()) != m_.cols())
    throw std::invalid_argument("projection/coordinate count mismatch");
  const Field& f = maps.front().field();
  std::vector<MultiPoly> out;
  out.reserve(m_.rows());
  for (int i = 0; i < m_.rows(); ++i) {
    MultiPoly acc(maps.front().nvars(), f);
    for (int j = 0; j < m_.cols(); ++j) {
      Scalar c = m_.at(i, j).to_field(f);
      if (!c.is_zero()) acc = acc + maps[j].scaled(c);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<ProjPoint> project_points(std::span<const ProjPoint> points,
                                      const LinearProjection& proj) {
  std::vector<ProjPoint> out;
  out.reserve(points.size());
  for (const ProjPoint& p : points) out.push_back(proj.apply(p));
  return out;
}

}  // namespace qs
