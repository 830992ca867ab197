#include "gmlab/matrix.hpp"

#include <algorithm>

namespace gmlab {

ExactMatrix ExactMatrix::identity(const FieldSpec& f, std::size_t n) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& f, const std::vector<ExactVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MathError("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactVector ExactMatrix::apply(const ExactVector& x) const {
  if (x.size() != cols_) throw MathError("dimension mismatch in matrix apply");
  ExactVector y(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw MathError("dimension mismatch in matrix product");
  ExactMatrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (!o.at(k, c).is_zero()) out.at(r, c) += at(r, k) * o.at(k, c);
    }
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("dimension mismatch");
  ExactMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) -= o.at(r, c);
  return out;
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult res{m, {}, 0};
  ExactMatrix& a = res.mat;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    // First-nonzero pivot rule: topmost unused row with a nonzero entry.
    std::size_t sel = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
    const Scalar inv = a.at(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      const Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= factor * a.at(pivot_row, c);
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank_of(const ExactMatrix& m) { return rref(m).rank; }

std::vector<ExactVector> kernel(const ExactMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    ExactVector v = zero_vector(m.field(), m.cols());
    v[free_col] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.mat.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ExactVector> eigenspace(const ExactMatrix& m, const Scalar& lambda) {
  if (m.rows() != m.cols()) throw MathError("eigenspace of a non-square matrix");
  ExactMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
  return kernel(shifted);
}

std::vector<ExactVector> span_basis(const std::vector<ExactVector>& vectors) {
  if (vectors.empty()) return {};
  const FieldSpec f = vectors.front().front().field();
  const RrefResult r = rref(ExactMatrix::from_rows(f, vectors));
  std::vector<ExactVector> basis;
  for (std::size_t i = 0; i < r.rank; ++i) basis.push_back(r.mat.row(i));
  return basis;
}

bool is_direct_sum(const std::vector<std::vector<ExactVector>>& subspaces) {
  std::size_t dim_sum = 0;
  std::vector<ExactVector> all;
  for (const auto& s : subspaces) {
    dim_sum += span_basis(s).size();
    all.insert(all.end(), s.begin(), s.end());
  }
  return span_basis(all).size() == dim_sum;
}

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw MathError("determinant of a non-square matrix");
  ExactMatrix a = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t sel = a.rows();
    for (std::size_t r = col; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel == a.rows()) return Scalar::zero(m.field());
    if (sel != col) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(col, c));
      det = -det;
    }
    det *= a.at(col, col);
    const Scalar inv = a.at(col, col).inverse();
    for (std::size_t r = col + 1; r < a.rows(); ++r) {
      if (a.at(r, col).is_zero()) continue;
      const Scalar factor = a.at(r, col) * inv;
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(col, c);
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw MathError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  const RrefResult red = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (red.pivot_cols.size() <= i || red.pivot_cols[i] != i)
      throw MathError("matrix is singular");
  ExactMatrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.mat.at(r, n + c);
  return inv;
}

std::optional<ExactVector> solve(const ExactMatrix& a, const ExactVector& b) {
  if (b.size() != a.rows()) throw MathError("dimension mismatch in solve");
  ExactMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const RrefResult red = rref(aug);
  for (std::size_t c : red.pivot_cols)
    if (c == a.cols()) return std::nullopt;  // inconsistent
  ExactVector x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
    x[red.pivot_cols[i]] = red.mat.at(i, a.cols());
  return x;
}

ExactVector zero_vector(const FieldSpec& f, std::size_t n) {
  return ExactVector(n, Scalar::zero(f));
}

ExactVector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  ExactVector v = zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

ExactVector add(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) throw MathError("vector dimension mismatch");
  ExactVector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

ExactVector sub(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) throw MathError("vector dimension mismatch");
  ExactVector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

ExactVector scale(const Scalar& c, const ExactVector& v) {
  ExactVector out = v;
  for (auto& e : out) e *= c;
  return out;
}

bool is_zero_vector(const ExactVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void SpanBuilder::reduce(ExactVector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[pivot_of_row_[i]];
    if (c.is_zero()) continue;
    const Scalar factor = c;  // pivots are normalized to 1
    for (std::size_t k = 0; k < dim_; ++k)
      if (!rows_[i][k].is_zero()) v[k] -= factor * rows_[i][k];
  }
}

bool SpanBuilder::insert(ExactVector v) {
  if (v.size() != dim_) throw MathError("vector dimension mismatch");
  reduce(v);
  std::size_t pivot = dim_;
  for (std::size_t k = 0; k < dim_; ++k)
    if (!v[k].is_zero()) {
      pivot = k;
      break;
    }
  if (pivot == dim_) return false;
  const Scalar inv = v[pivot].inverse();
  for (auto& e : v) e *= inv;
  // Keep earlier rows reduced against the new pivot.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = rows_[i][pivot];
    if (c.is_zero()) continue;
    const Scalar factor = c;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!v[k].is_zero()) rows_[i][k] -= factor * v[k];
  }
  rows_.push_back(std::move(v));
  pivot_of_row_.push_back(pivot);
  return true;
}

bool SpanBuilder::contains(ExactVector v) const {
  reduce(v);
  return is_zero_vector(v);
}

std::vector<ExactVector> SpanBuilder::basis() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  std::vector<ExactVector> out;
  out.reserve(rows_.size());
  for (std::size_t i : order) out.push_back(rows_[i]);
  return out;
}

}  // namespace gmlab
