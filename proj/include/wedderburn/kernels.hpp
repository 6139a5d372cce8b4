#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version (the default,
// used by the library) and a serial reference in kernels::serial kept for
// testing and benchmarking. Both produce identical results; arithmetic is
// exact so evaluation order never matters.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "wedderburn/field.hpp"

namespace wedderburn::kernels {

/// c = a * b for row-major a (m x k), b (k x n), c (m x n).
void matmul(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b,
            std::span<Residue> c, std::size_t m, std::size_t k, std::size_t n);

/// One Gauss-Jordan step: row `pivot_row` must already have a 1 at
/// `pivot_col`; clears that column in every other row.
void eliminate_column(const PrimeField& f, std::span<Residue> data, std::size_t rows,
                      std::size_t cols, std::size_t pivot_row, std::size_t pivot_col);

/// First basis triple (i, j, k), in lexicographic order, with
/// (b_i b_j) b_k != b_i (b_j b_k); nullopt when associative.
/// `sc` is the n*n*n structure-constant tensor c[i][j][k].
std::optional<std::array<std::size_t, 3>> associativity_witness(const PrimeField& f,
                                                                std::span<const Residue> sc,
                                                                std::size_t n);

/// Smallest index in [0, count) for which `ok` returns false.
std::optional<std::size_t> first_failure(std::size_t count,
                                         const std::function<bool(std::size_t)>& ok);

namespace serial {

void matmul(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b,
            std::span<Residue> c, std::size_t m, std::size_t k, std::size_t n);
void eliminate_column(const PrimeField& f, std::span<Residue> data, std::size_t rows,
                      std::size_t cols, std::size_t pivot_row, std::size_t pivot_col);
std::optional<std::array<std::size_t, 3>> associativity_witness(const PrimeField& f,
                                                                std::span<const Residue> sc,
                                                                std::size_t n);
std::optional<std::size_t> first_failure(std::size_t count,
                                         const std::function<bool(std::size_t)>& ok);

}  // namespace serial

}  // namespace wedderburn::kernels
