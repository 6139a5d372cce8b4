#include "wedderburn/kernels.hpp"

#include "wedderburn/accumulator.hpp"

#include <omp.h>

#include <cstdint>
#include <limits>
#include <vector>

namespace wedderburn::kernels {

namespace {

void matmul_rows(const PrimeField& f, const Residue* a, const Residue* b, Residue* c,
                 std::size_t row_begin, std::size_t row_end, std::size_t k, std::size_t n) {
  RowAccumulator acc(f, n);
  for (std::size_t i = row_begin; i < row_end; ++i) {
    acc.clear();
    for (std::size_t l = 0; l < k; ++l) acc.add_scaled(a[i * k + l], b + l * n);
    acc.store(c + i * n);
  }
}

void eliminate_row(const PrimeField& f, Residue* data, std::size_t cols, std::size_t r,
                   std::size_t pivot_row, std::size_t pivot_col) {
  Residue* row = data + r * cols;
  const Residue factor = row[pivot_col];
  if (factor == 0) return;
  const Residue* prow = data + pivot_row * cols;
  const Residue negf = f.neg(factor);
  for (std::size_t j = pivot_col; j < cols; ++j)
    if (prow[j] != 0) row[j] = f.add(row[j], f.mul(negf, prow[j]));
}

// Scans all (j, k) for a fixed i. Returns the first failing (j, k).
std::optional<std::array<std::size_t, 3>> associativity_slice(const PrimeField& f,
                                                              const Residue* sc, std::size_t n,
                                                              std::size_t i) {
  const std::size_t n2 = n * n;
  RowAccumulator lhs_acc(f, n2);
  RowAccumulator rhs_acc(f, n);
  std::vector<Residue> lhs(n2), rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    // (b_i b_j) b_k = sum_l c[i][j][l] (b_l b_k), all k at once
    lhs_acc.clear();
    const Residue* bij = sc + (i * n + j) * n;
    for (std::size_t l = 0; l < n; ++l) lhs_acc.add_scaled(bij[l], sc + l * n2);
    lhs_acc.store(lhs.data());
    for (std::size_t k = 0; k < n; ++k) {
      // b_i (b_j b_k) = sum_l c[j][k][l] (b_i b_l)
      rhs_acc.clear();
      const Residue* bjk = sc + (j * n + k) * n;
      for (std::size_t l = 0; l < n; ++l) rhs_acc.add_scaled(bjk[l], sc + (i * n + l) * n);
      rhs_acc.store(rhs.data());
      for (std::size_t m = 0; m < n; ++m)
        if (lhs[k * n + m] != rhs[m]) return std::array<std::size_t, 3>{i, j, k};
    }
  }
  return std::nullopt;
}

}  // namespace

void matmul(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b,
            std::span<Residue> c, std::size_t m, std::size_t k, std::size_t n) {
  const auto rows = static_cast<std::int64_t>(m);
#pragma omp parallel
  {
    RowAccumulator acc(f, n);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
      acc.clear();
      for (std::size_t l = 0; l < k; ++l) acc.add_scaled(a[i * k + l], b.data() + l * n);
      acc.store(c.data() + i * n);
    }
  }
}

void eliminate_column(const PrimeField& f, std::span<Residue> data, std::size_t rows,
                      std::size_t cols, std::size_t pivot_row, std::size_t pivot_col) {
  const auto count = static_cast<std::int64_t>(rows);
  // Small systems are not worth a parallel region.
  if (rows * cols < 4096) {
    serial::eliminate_column(f, data, rows, cols, pivot_row, pivot_col);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < count; ++r)
    if (static_cast<std::size_t>(r) != pivot_row)
      eliminate_row(f, data.data(), cols, r, pivot_row, pivot_col);
}

std::optional<std::array<std::size_t, 3>> associativity_witness(const PrimeField& f,
                                                                std::span<const Residue> sc,
                                                                std::size_t n) {
  std::vector<std::optional<std::array<std::size_t, 3>>> found(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) found[i] = associativity_slice(f, sc.data(), n, i);
  for (const auto& w : found)
    if (w) return w;
  return std::nullopt;
}

std::optional<std::size_t> first_failure(std::size_t count,
                                         const std::function<bool(std::size_t)>& ok) {
  std::vector<char> failed(count, 0);
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) failed[i] = ok(static_cast<std::size_t>(i)) ? 0 : 1;
  for (std::size_t i = 0; i < count; ++i)
    if (failed[i]) return i;
  return std::nullopt;
}

namespace serial {

void matmul(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b,
            std::span<Residue> c, std::size_t m, std::size_t k, std::size_t n) {
  matmul_rows(f, a.data(), b.data(), c.data(), 0, m, k, n);
}

void eliminate_column(const PrimeField& f, std::span<Residue> data, std::size_t rows,
                      std::size_t cols, std::size_t pivot_row, std::size_t pivot_col) {
  for (std::size_t r = 0; r < rows; ++r)
    if (r != pivot_row) eliminate_row(f, data.data(), cols, r, pivot_row, pivot_col);
}

std::optional<std::array<std::size_t, 3>> associativity_witness(const PrimeField& f,
                                                                std::span<const Residue> sc,
                                                                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (auto w = associativity_slice(f, sc.data(), n, i)) return w;
  return std::nullopt;
}

std::optional<std::size_t> first_failure(std::size_t count,
                                         const std::function<bool(std::size_t)>& ok) {
  for (std::size_t i = 0; i < count; ++i)
    if (!ok(i)) return i;
  return std::nullopt;
}

}  // namespace serial

}  // namespace wedderburn::kernels
