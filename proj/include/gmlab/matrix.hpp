#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gmlab/scalar.hpp"

namespace gmlab {

using ExactVector = std::vector<Scalar>;

/// Dense matrix over a single field. All elimination is exact.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static ExactMatrix identity(const FieldSpec& f, std::size_t n);
  static ExactMatrix from_rows(const FieldSpec& f, const std::vector<ExactVector>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactVector row(std::size_t r) const;
  ExactMatrix transposed() const;

  ExactVector apply(const ExactVector& x) const;  // M * x, column convention
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;

  bool operator==(const ExactMatrix& o) const = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  ExactMatrix mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form with the first-nonzero pivot rule; the output is
/// the canonical RREF of the row space.
RrefResult rref(const ExactMatrix& m);

std::size_t rank_of(const ExactMatrix& m);

/// Basis of {x : M x = 0}, one vector per free column in ascending order.
std::vector<ExactVector> kernel(const ExactMatrix& m);

/// kernel(M - lambda I); M must be square.
std::vector<ExactVector> eigenspace(const ExactMatrix& m, const Scalar& lambda);

/// Canonical (RREF-row) basis of the span of the given vectors.
std::vector<ExactVector> span_basis(const std::vector<ExactVector>& vectors);

/// True iff the subspace dimensions add up to the dimension of the joint span.
bool is_direct_sum(const std::vector<std::vector<ExactVector>>& subspaces);

Scalar determinant(const ExactMatrix& m);

/// Throws MathError when singular.
ExactMatrix inverse(const ExactMatrix& m);

/// A solution of A x = b when the system is consistent (free coordinates 0).
std::optional<ExactVector> solve(const ExactMatrix& a, const ExactVector& b);

ExactVector zero_vector(const FieldSpec& f, std::size_t n);
ExactVector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
ExactVector add(const ExactVector& a, const ExactVector& b);
ExactVector sub(const ExactVector& a, const ExactVector& b);
ExactVector scale(const Scalar& c, const ExactVector& v);
bool is_zero_vector(const ExactVector& v);

/// Incrementally maintained echelon basis of a growing span.
class SpanBuilder {
 public:
  explicit SpanBuilder(const FieldSpec& f, std::size_t dim) : field_(f), dim_(dim) {}

  /// Returns true when v enlarged the span.
  bool insert(ExactVector v);
  bool contains(ExactVector v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  /// Echelon rows, pivots normalized to 1, sorted by pivot column.
  std::vector<ExactVector> basis() const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<ExactVector> rows_;          // echelon rows
  std::vector<std::size_t> pivot_of_row_;  // pivot column per row

  void reduce(ExactVector& v) const;
};

}  // namespace gmlab
