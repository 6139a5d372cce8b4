#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wedderburn/field.hpp"

namespace wedderburn {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n);
  /// All rows must have the same length; `cols` is used when `rows` is empty.
  static Matrix from_rows(PrimeField field, const std::vector<Vec>& rows, std::size_t cols = 0);
  static Matrix from_columns(PrimeField field, const std::vector<Vec>& columns,
                             std::size_t rows = 0);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Residue> values);

  std::span<const Residue> data() const noexcept { return data_; }
  std::span<Residue> data() noexcept { return data_; }

  Matrix transpose() const;
  /// M x
  Vec apply(std::span<const Residue> x) const;
  bool is_zero() const { return vec_is_zero(data_); }
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form with first-nonzero pivoting.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Some solution of M x = b, free variables set to zero; nullopt if none.
std::optional<Vec> solve_linear(const Matrix& m, std::span<const Residue> b);

/// Basis of {v : M v = 0}, one vector per free column in increasing order.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Basis of the column space of `m`: the nonzero rows of rref(m^T).
/// Returns the basis rows together with their pivot positions.
RowEchelon column_space(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Coordinates of `v` against a basis in reduced row echelon form (rows of
/// `basis` with the given pivots), or nullopt if `v` is outside the span.
std::optional<Vec> coordinates_in_echelon_basis(const RowEchelon& basis,
                                                std::span<const Residue> v);

}  // namespace wedderburn
