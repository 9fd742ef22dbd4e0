#include "qs/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace qs {

ExactMatrix::ExactMatrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  e_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

ExactMatrix ExactMatrix::identity(int n, const Field& f) {
  ExactMatrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& f) {
  int nc = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  ExactMatrix m(0, nc, f);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void ExactMatrix::append_row(std::span<const Scalar> row) {
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("row length does not match column count");
  for (const Scalar& s : row) {
    if (!(s.field() == field_)) throw std::invalid_argument("row entry in wrong field");
    e_.push_back(s);
  }
  ++rows_;
}

std::vector<Scalar> ExactMatrix::multiply(std::span<const Scalar> v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length does not match column count");
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) {
    Scalar acc = Scalar::zero(field_);
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

ExactMatrix ExactMatrix::to_prime_field(std::uint64_t p) const {
  ExactMatrix m(rows_, cols_, Field::prime(p));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).to_prime_field(p);
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] != o.e_[k]) return false;
  return true;
}

RrefResult rref(const ExactMatrix& input) {
  RrefResult res{input, 0, {}};
  ExactMatrix& m = res.matrix;
  const bool rational = m.field().is_rational();
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int i = lead; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      if (!rational) {
        pivot = i;
        break;
      }
      std::size_t sz = m.at(i, col).bit_size();
      if (pivot == -1 || sz < best) {
        pivot = i;
        best = sz;
      }
    }
    if (pivot == -1) continue;
    if (pivot != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    Scalar inv = m.at(lead, col).inverse();
    for (int j = col; j < m.cols(); ++j)
      if (!m.at(lead, j).is_zero()) m.at(lead, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m.at(lead, j).is_zero()) m.at(i, j) -= factor * m.at(lead, j);
    }
    res.pivot_columns.push_back(col);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivot_columns.size());
  return res;
}

int rank(const ExactMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(f));
    v[free_col] = Scalar::one(f);
    for (int k = 0; k < r.rank; ++k) {
      const Scalar& entry = r.matrix.at(k, free_col);
      if (!entry.is_zero()) v[r.pivot_columns[k]] = -entry;
    }
    // exact certificate: m * v == 0
    for (const Scalar& s : m.multiply(v))
      if (!s.is_zero()) throw std::logic_error("kernel vector fails m*v == 0");
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qs
