#ifndef QS_MATRIX_HPP
#define QS_MATRIX_HPP

#include <span>
#include <vector>

#include "qs/field.hpp"

namespace qs {

// Dense row-major matrix over one Field.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, const Field& f);
  static ExactMatrix identity(int n, const Field& f);
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  void append_row(std::span<const Scalar> row);
  std::vector<Scalar> multiply(std::span<const Scalar> v) const;  // m * v
  ExactMatrix to_prime_field(std::uint64_t p) const;              // entrywise reduction

  bool operator==(const ExactMatrix& o) const;

 private:
  int rows_;
  int cols_;
  Field field_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  ExactMatrix matrix;
  int rank = 0;
  std::vector<int> pivot_columns;
};

// Reduced row echelon form by exact Gaussian elimination. Over QQ the pivot
// with the smallest numerator/denominator bit size is chosen to keep entry
// growth down; over GF(p) the first nonzero entry is taken.
RrefResult rref(const ExactMatrix& m);

int rank(const ExactMatrix& m);

// Basis of the right kernel; each vector is verified against m exactly.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

}  // namespace qs

#endif
