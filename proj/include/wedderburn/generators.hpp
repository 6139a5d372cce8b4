#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wedderburn/algebra.hpp"
#include "wedderburn/polynomial.hpp"

namespace wedderburn {

/// Multiplication table of a finite group: table[g][h] = index of g h.
struct CayleyTable {
  std::size_t order = 0;
  std::size_t identity = 0;
  std::vector<std::vector<std::size_t>> table;

  /// Latin square, two-sided identity and associativity on every triple.
  /// Throws InvalidCayley.
  void validate() const;
};

/// Built-in tables: "C2", "C3", "C4", "S3", "D4", "Q8". Throws InvalidInput
/// for other names.
CayleyTable named_group(const std::string& name);
std::vector<std::string> named_groups();

/// The cyclic group of order m, generator at index 1.
CayleyTable cyclic_group(std::size_t m);

/// F_p[G] with basis indexed by group elements. Throws InvalidCayley.
AlgebraPtr group_algebra(const CayleyTable& table, std::uint32_t p);

using BlockSpec = std::vector<std::pair<std::size_t, std::size_t>>;

struct PlantedDecomposition {
  BlockSpec spec;  // (n_i, d_i), sorted
  AlgebraPtr presentation;
  std::optional<Matrix> scramble;
};

/// M_n(F_p[T]/(poly)) with basis E_ab T^t at index (a n + b) d + t.
/// Throws ReduciblePolynomial unless poly is irreducible of degree >= 1.
PlantedDecomposition matrix_algebra_over_extension(std::size_t n, std::uint32_t p,
                                                   const Polynomial& poly);

/// M_n(F_p).
PlantedDecomposition matrix_algebra(std::size_t n, std::uint32_t p);

/// The first monic irreducible polynomial of degree d in the order of
/// coefficient vectors read as base-p numbers, highest coefficient first.
Polynomial find_irreducible(std::uint32_t p, std::size_t d);

/// Block-diagonal sum. Throws ModulusMismatch, InvalidInput when empty.
AlgebraPtr direct_sum(const std::vector<AlgebraPtr>& parts);
PlantedDecomposition direct_sum(const std::vector<PlantedDecomposition>& parts);

/// Presentation in the basis b'_j = sum_i S[i][j] b_i. S must be invertible
/// (InvalidInput otherwise).
AlgebraPtr change_basis(const Algebra& a, const Matrix& s);

/// A random invertible S (rejection-sampled, at most 64 draws, then
/// InternalSamplingFailure) and the presentation in the new basis.
std::pair<AlgebraPtr, Matrix> scramble(const Algebra& a, std::uint64_t seed);
PlantedDecomposition scramble(const PlantedDecomposition& planted, std::uint64_t seed);

/// Sum of n_i^2 d_i matrix algebras over extensions, each extension from
/// find_irreducible.
PlantedDecomposition planted(const BlockSpec& spec, std::uint32_t p);

/// Upper-triangular 2x2 matrices over F_p, basis E11, E12, E22.
AlgebraPtr upper_triangular(std::uint32_t p);

}  // namespace wedderburn
