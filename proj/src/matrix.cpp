#include "wedderburn/matrix.hpp"

#include <algorithm>

#include "wedderburn/kernels.hpp"

namespace wedderburn {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<Vec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::ShapeMismatch, "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(PrimeField field, const std::vector<Vec>& columns, std::size_t rows) {
  if (!columns.empty()) rows = columns.front().size();
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorCode::ShapeMismatch, "ragged matrix columns");
    m.set_column(c, columns[c]);
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Residue> values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(std::span<const Residue> x) const {
  if (x.size() != cols_) fail(ErrorCode::ShapeMismatch, "matrix-vector size mismatch");
  Vec out(rows_);
  kernels::serial::matmul(field_, data_, x, out, rows_, cols_, 1);
  return out;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field()))
    fail(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  Matrix c(a.field(), a.rows(), b.cols());
  kernels::matmul(a.field(), a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i)
    c.data()[i] = a.field().add(a.data()[i], b.data()[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::ShapeMismatch, "matrix difference shape mismatch");
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i)
    c.data()[i] = a.field().sub(a.data()[i], b.data()[i]);
  return c;
}

RowEchelon rref(Matrix m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r) std::swap_ranges(m.row(pr).begin(), m.row(pr).end(), m.row(r).begin());
    const Residue scale = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
    kernels::eliminate_column(f, m.data(), m.rows(), m.cols(), r, c);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Vec> solve_linear(const Matrix& m, std::span<const Residue> b) {
  if (b.size() != m.rows()) fail(ErrorCode::ShapeMismatch, "right-hand side size mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

RowEchelon column_space(const Matrix& m) {
  RowEchelon e = rref(m.transpose());
  Matrix basis(m.field(), e.rank(), m.rows());
  for (std::size_t i = 0; i < e.rank(); ++i)
    std::copy(e.reduced.row(i).begin(), e.reduced.row(i).end(), basis.row(i).begin());
  return {std::move(basis), std::move(e.pivots)};
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<Vec> coordinates_in_echelon_basis(const RowEchelon& basis,
                                                std::span<const Residue> v) {
  const PrimeField& f = basis.reduced.field();
  Vec coords(basis.rank());
  Vec residual(v.begin(), v.end());
  for (std::size_t t = 0; t < basis.rank(); ++t) {
    coords[t] = v[basis.pivots[t]];
    vec_axpy(f, f.neg(coords[t]), basis.reduced.row(t), residual);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coords;
}

}  // namespace wedderburn
