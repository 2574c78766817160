#include "erasurelab/matrix.hpp"

#include <algorithm>
#include <string>

#include "erasurelab/errors.hpp"

namespace erasurelab {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {
  require(rows > 0 && cols > 0, ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Element{1};
  return m;
}

Matrix Matrix::from_values(Field field, std::size_t rows, std::size_t cols,
                           std::span<const std::uint32_t> values) {
  require(values.size() == rows * cols, ErrorKind::DimensionMismatch,
          "expected " + std::to_string(rows * cols) + " entries");
  Matrix m(std::move(field), rows, cols);
  for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = m.field_.element(values[i]);
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<std::uint32_t>>& rows) {
  require(!rows.empty(), ErrorKind::DimensionMismatch, "no rows");
  std::vector<std::uint32_t> flat;
  for (const auto& r : rows) {
    require(r.size() == rows.front().size(), ErrorKind::DimensionMismatch, "ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_values(std::move(field), rows.size(), rows.front().size(), flat);
}

void Matrix::set(std::size_t r, std::size_t c, Element v) {
  require(r < rows_ && c < cols_, ErrorKind::DimensionMismatch, "index out of range");
  require(field_.contains(v), ErrorKind::BadParameters, "entry outside " + field_.name());
  (*this)(r, c) = v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<std::uint32_t>> Matrix::values() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).value;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j] < cols_, ErrorKind::DimensionMismatch, "column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i] < rows_, ErrorKind::DimensionMismatch, "row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(rows[i], c);
  }
  return out;
}

std::size_t Matrix::nonzeros() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](Element e) { return e.value != 0; }));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), ErrorKind::FieldMismatch, "matrix product");
  require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matrix product");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element x = a(i, k);
      if (x.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

Vector mat_vec(const Matrix& m, std::span<const Element> v) {
  require(v.size() == m.cols(), ErrorKind::DimensionMismatch, "matrix-vector product");
  const Field& f = m.field();
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Element acc{};
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

namespace {

// In-place Gauss-Jordan over the first `limit` columns of a row-major buffer.
// Returns pivot columns in order.
std::vector<std::size_t> gauss_jordan(const Field& f, std::vector<Element>& a, std::size_t rows,
                                      std::size_t cols, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c].value == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    const Element inv = f.inv(a[r * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Element factor = a[i * cols + c];
      if (factor.value == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

EchelonForm row_reduce(const Matrix& m) {
  Matrix out = m;
  std::vector<Element> buf(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) buf[r * m.cols() + c] = m(r, c);
  auto pivots = gauss_jordan(m.field(), buf, m.rows(), m.cols(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = buf[r * m.cols() + c];
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

bool columns_independent(const Matrix& m, std::span<const std::size_t> cols) {
  const std::size_t k = cols.size();
  if (k == 0) return true;
  if (k > m.rows()) return false;
  // Eliminate on the transpose: k vectors of length rows.
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::vector<Element> a(k * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < n; ++r) a[i * n + r] = m(r, cols[i]);
  std::size_t rank_so_far = 0;
  for (std::size_t c = 0; c < n && rank_so_far < k; ++c) {
    std::size_t p = rank_so_far;
    while (p < k && a[p * n + c].value == 0) ++p;
    if (p == k) continue;
    if (p != rank_so_far)
      for (std::size_t j = c; j < n; ++j) std::swap(a[p * n + j], a[rank_so_far * n + j]);
    const Element inv = f.inv(a[rank_so_far * n + c]);
    for (std::size_t i = rank_so_far + 1; i < k; ++i) {
      const Element factor = f.mul(a[i * n + c], inv);
      if (factor.value == 0) continue;
      for (std::size_t j = c; j < n; ++j)
        a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[rank_so_far * n + j]));
    }
    ++rank_so_far;
  }
  return rank_so_far == k;
}

Matrix systematic_form(const Matrix& m, Side side) {
  const std::size_t r = m.rows(), n = m.cols();
  require(r <= n, ErrorKind::SingularBlock, "more rows than columns");
  // Permute the designated block to the front, reduce, then permute back.
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = side == Side::Left ? j : (j + n - r) % n;
  Matrix permuted = m.select_columns(order);

  std::vector<Element> buf(r * n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) buf[i * n + j] = permuted(i, j);
  const auto pivots = gauss_jordan(m.field(), buf, r, n, r);
  require(pivots.size() == r, ErrorKind::SingularBlock,
          side == Side::Left ? "leading block is singular" : "trailing block is singular");

  Matrix out(m.field(), r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, order[j]) = buf[i * n + j];
  return out;
}

Vector solve_for_columns(const Matrix& m, std::span<const std::size_t> cols,
                         std::span<const Element> syndrome) {
  require(syndrome.size() == m.rows(), ErrorKind::DimensionMismatch, "syndrome length must equal row count");
  for (auto c : cols) require(c < m.cols(), ErrorKind::DimensionMismatch, "column index out of range");
  const Field& f = m.field();
  const std::size_t rows = m.rows(), k = cols.size(), width = k + 1;
  if (k == 0) {
    for (auto s : syndrome)
      require(s.value == 0, ErrorKind::InconsistentSyndrome, "nonzero syndrome with nothing to solve");
    return {};
  }
  std::vector<Element> a(rows * width);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r * width + j] = m(r, cols[j]);
    a[r * width + k] = syndrome[r];
  }
  const auto pivots = gauss_jordan(f, a, rows, width, k);
  require(pivots.size() == k, ErrorKind::DependentColumns, "selected columns are linearly dependent");
  for (std::size_t r = k; r < rows; ++r)
    require(a[r * width + k].value == 0, ErrorKind::InconsistentSyndrome, "syndrome outside column span");
  Vector x(k);
  for (std::size_t j = 0; j < k; ++j) x[j] = a[j * width + k];
  return x;
}

std::vector<Vector> null_space(const Matrix& m) {
  const auto ech = row_reduce(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i)
      v[ech.pivot_columns[i]] = f.neg(ech.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace erasurelab
