#ifndef QS_GEOMETRY_HPP
#define QS_GEOMETRY_HPP

#include <span>
#include <string>
#include <vector>

#include "qs/matrix.hpp"
#include "qs/poly.hpp"
#include "qs/rng.hpp"

namespace qs {

// Point of P^r with exact coordinates, stored normalized so that the first
// nonzero coordinate equals 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Scalar> coords);  // throws on the zero vector

  int ambient_dim() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coords() const { return c_; }
  const Field& field() const { return c_.front().field(); }

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  std::vector<Scalar> c_;
};

// Projective dimension of the linear span; -1 for the empty list.
int span_dimension(std::span<const ProjPoint> points);

// True when every examined (ambientDim+1)-subset has full span. Exhaustive
// whenever the number of subsets is at most `trials`, otherwise that many
// seeded random subsets are examined.
bool general_position_check(std::span<const ProjPoint> points, long long trials,
                            std::uint64_t seed);

// Linear projection of P^r from a point: a full-rank r x (r+1) matrix whose
// kernel is spanned by the center.
class LinearProjection {
 public:
  static LinearProjection from_center(const ProjPoint& center);

  const ProjPoint& center() const { return center_; }
  const ExactMatrix& matrix() const { return m_; }

  ProjPoint apply(const ProjPoint& p) const;  // throws at the center
  // Composes coordinate polynomials: result[i] = sum_j m(i,j) * maps[j].
  std::vector<MultiPoly> compose(std::span<const MultiPoly> maps) const;

 private:
  LinearProjection(ProjPoint center, ExactMatrix m)
      : center_(std::move(center)), m_(std::move(m)) {}
  ProjPoint center_;
  ExactMatrix m_;
};

std::vector<ProjPoint> project_points(std::span<const ProjPoint> points,
                                      const LinearProjection& proj);

}  // namespace qs

#endif
