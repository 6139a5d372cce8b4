#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wedderburn/algebra.hpp"
#include "wedderburn/idempotents.hpp"
#include "wedderburn/semisimple.hpp"

namespace wedderburn {

/// One equivalence class of primitive idempotents e_1, ..., e_n together
/// with connecting elements a[mu] in e_1 A e_mu and b[mu] in e_mu A e_1
/// satisfying a[mu] b[mu] = e_1 and b[mu] a[mu] = e_mu; a[0] = b[0] = e_1.
struct ConnectingFamily {
  std::vector<Idempotent> members;  // members[0] is the representative
  std::vector<Vec> a;
  std::vector<Vec> b;

  const Idempotent& representative() const { return members.front(); }
  std::size_t size() const noexcept { return members.size(); }
};

/// Partitions the parts into equivalence classes. Representatives are the
/// lexicographically smallest coordinate vectors; members follow in
/// lexicographic order.
std::vector<ConnectingFamily> group_by_equivalence(const Algebra& a,
                                                   const OrthogonalDecomposition& decomposition);

/// c = sum of the members; checked central and idempotent.
Vec central_idempotent(const Algebra& a, const ConnectingFamily& family);

/// units[mu * n + nu] = b[mu] a[nu].
struct MatrixUnitSystem {
  std::size_t size = 0;
  std::vector<Vec> units;
  Vec block_identity;

  const Vec& operator()(std::size_t mu, std::size_t nu) const { return units[mu * size + nu]; }
};

/// Builds the units and checks every relation exactly; throws
/// InvariantViolation on failure.
MatrixUnitSystem matrix_units(const Algebra& a, const ConnectingFamily& family, const Vec& c);

/// Description of the first violated relation, or nullopt.
std::optional<std::string> matrix_unit_violation(const Algebra& a, const MatrixUnitSystem& units);

struct WedderburnBlock {
  std::size_t n;
  CornerAlgebra division;  // e_1 A e_1, a field
  Vec central;
  ConnectingFamily family;
  MatrixUnitSystem units;

  std::size_t degree() const noexcept { return division.dim(); }
};

/// Flattened coordinates of M_{n_1}(D_1) + ... + M_{n_k}(D_k): block i,
/// row mu, column nu, D-basis index t.
class BlockLayout {
 public:
  struct Coordinate {
    std::size_t block, row, col, basis;
  };

  BlockLayout() = default;
  /// (n_i, degree of D_i) per block.
  explicit BlockLayout(std::vector<std::pair<std::size_t, std::size_t>> shapes);

  std::size_t total() const noexcept { return total_; }
  std::size_t blocks() const noexcept { return shapes_.size(); }
  std::size_t size(std::size_t block) const { return shapes_[block].first; }
  std::size_t degree(std::size_t block) const { return shapes_[block].second; }
  std::size_t offset(std::size_t block) const { return offsets_[block]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& shapes() const noexcept { return shapes_; }

  std::size_t index(std::size_t block, std::size_t row, std::size_t col, std::size_t t) const {
    return offsets_[block] + (row * shapes_[block].first + col) * shapes_[block].second + t;
  }
  Coordinate coordinate(std::size_t flat) const;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> shapes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

struct DecompositionResult {
  std::vector<WedderburnBlock> blocks;
  Matrix iso;          // column j = flattened image of b_j
  Matrix iso_inverse;
  BlockLayout layout;
  std::uint64_t seed;
  OrthogonalDecomposition primitive;

  std::vector<AlgebraPtr> divisions() const;
  /// Sorted (n_i, degree D_i) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> block_multiset() const;
};

/// Entry (mu, nu) = D-coordinates of a[mu] x b[nu], row-major.
/// Throws InvariantViolation if an entry leaves the corner.
std::vector<Vec> block_map(const Algebra& a, const WedderburnBlock& block, std::span<const Residue> x);

/// The whole pipeline: primitive decomposition, grouping, central
/// idempotents, matrix units, corner fields and the linear map. Blocks are
/// sorted by (n, degree, central idempotent).
DecompositionResult full_isomorphism(const SemisimpleAlgebra& a, std::uint64_t seed,
                                     std::size_t cap = kDefaultSplitCap);

/// Blockwise product in the flattened layout, entries multiplied in each D.
/// Throws ShapeMismatch.
Vec target_multiply(const BlockLayout& layout, const std::vector<AlgebraPtr>& divisions,
                    std::span<const Residue> x, std::span<const Residue> y);

/// The identity of the target ring in the flattened layout.
Vec target_identity(const BlockLayout& layout, const std::vector<AlgebraPtr>& divisions);

/// Everything needed to re-verify a decomposition with no recomputation:
/// the serialized form of a DecompositionResult.
struct DecompositionReport {
  struct Block {
    std::size_t n = 0;
    std::size_t division_degree = 0;
    Vec central_idempotent;
    Vec representative_idempotent;
    std::vector<Vec> idempotents;
    std::vector<Vec> connecting_a;
    std::vector<Vec> connecting_b;
    std::vector<Vec> matrix_units;  // row-major n x n
    std::vector<Vec> division_basis;
  };

  std::uint32_t p = 0;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::vector<Block> blocks;
  std::vector<Vec> iso_matrix;  // rows
  std::vector<Vec> iso_inverse;
  BlockLayout layout;
};

struct VerificationReport {
  bool bijective = false;
  bool unit = false;
  bool multiplicative = false;
  bool multiplicative_checked = false;
  bool orthogonality = false;
  bool matrix_units = false;
  std::optional<std::pair<std::size_t, std::size_t>> multiplicative_witness;
  std::vector<std::string> failures;

  bool passed() const noexcept {
    return bijective && unit && orthogonality && matrix_units &&
           (multiplicative || !multiplicative_checked);
  }
};

DecompositionReport make_report(const DecompositionResult& result, const Algebra& a);

/// Re-proves the isomorphism from report data alone. The map is rebuilt
/// from the matrix units as x -> (E_{1 mu} x E_{nu 1}) and compared with the
/// stored matrix. `full` enables the all-pairs multiplicativity check.
/// Throws InvalidInput when the report does not fit the algebra.
VerificationReport verify_isomorphism(const AlgebraPtr& a, const DecompositionReport& report,
                                      bool full = true);
VerificationReport verify_isomorphism(const AlgebraPtr& a, const DecompositionResult& result,
                                      bool full = true);

}  // namespace wedderburn
