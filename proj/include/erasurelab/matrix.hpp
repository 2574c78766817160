#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "erasurelab/field.hpp"

namespace erasurelab {

using Vector = std::vector<Element>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_values(Field field, std::size_t rows, std::size_t cols,
                            std::span<const std::uint32_t> values);
  static Matrix from_rows(Field field, const std::vector<std::vector<std::uint32_t>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  /// Bounds- and field-checked write.
  void set(std::size_t r, std::size_t c, Element v);

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<std::vector<std::uint32_t>> values() const;

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  std::size_t nonzeros() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// M * v.
Vector mat_vec(const Matrix& m, std::span<const Element> v);

/// Reduced row echelon form. Pivot rule: for each column left to right, the
/// first row at or below the current one with a nonzero entry.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};
EchelonForm row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// True iff the listed columns of `m` are linearly independent. An empty list
/// is independent.
bool columns_independent(const Matrix& m, std::span<const std::size_t> cols);

enum class Side { Left, Right };

/// Row-equivalent matrix whose leading (Left) or trailing (Right) rows x rows
/// block is the identity. Throws SingularBlock when that block is singular.
Matrix systematic_form(const Matrix& m, Side side);

/// Unique x with M(:, E) x = syndrome. Throws DimensionMismatch,
/// DependentColumns, or InconsistentSyndrome when no solution exists.
Vector solve_for_columns(const Matrix& m, std::span<const std::size_t> cols,
                         std::span<const Element> syndrome);

/// Rows form a basis of {x : M x = 0}; zero rows when the kernel is trivial.
std::vector<Vector> null_space(const Matrix& m);

}  // namespace erasurelab
