#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "wedderburn/algebra.hpp"
#include "wedderburn/semisimple.hpp"

namespace wedderburn {

inline constexpr std::size_t kDefaultSplitCap = 256;

/// e with e^2 = e, checked on construction.
class Idempotent {
 public:
  /// Throws NotIdempotent.
  Idempotent(const Algebra& a, Vec coords);

  const Vec& coords() const noexcept { return coords_; }
  friend bool operator==(const Idempotent&, const Idempotent&) = default;

 private:
  Vec coords_;
};

/// Evidence that e A e is a field, hence e is primitive: the corner is
/// commutative and its Frobenius map fixes a one-dimensional subspace.
struct PrimitivityCertificate {
  Idempotent e;
  std::size_t corner_dim;
  std::size_t frobenius_fixed_dim;
  bool corner_commutative;

  bool claims_field() const noexcept { return corner_commutative && frobenius_fixed_dim == 1; }
};

/// Rebuilds the corner and re-derives every field of the certificate.
bool recheck_certificate(const SemisimpleAlgebra& a, const PrimitivityCertificate& cert);

struct Split {
  Idempotent first;
  Idempotent second;
};

using SplitOutcome = std::variant<PrimitivityCertificate, Split>;

/// One splitting step on e (nonzero). Either certifies e primitive or
/// returns nonzero orthogonal idempotents summing to e.
///
/// A nontrivial Frobenius-fixed central element of eAe is used first and
/// the result is deterministic. When the center of eAe is a field K but
/// eAe is larger, eAe is a full matrix algebra over K and random elements
/// are drawn from `rng` until one has a minimal polynomial with two coprime
/// factors. Throws SplitIterationCapExceeded after `cap` failed draws.
SplitOutcome split_once(const SemisimpleAlgebra& a, const Idempotent& e, std::mt19937_64& rng,
                        std::size_t cap = kDefaultSplitCap);

struct OrthogonalDecomposition {
  std::vector<Idempotent> parts;
  std::vector<PrimitivityCertificate> certificates;  // parallel to parts
};

/// Complete decomposition of 1_A into pairwise orthogonal primitive
/// idempotents. Children replace their parent in place, first child first.
OrthogonalDecomposition decompose_identity(const SemisimpleAlgebra& a, std::uint64_t seed,
                                           std::size_t cap = kDefaultSplitCap);

/// Exact check of sum = 1, idempotency, and zero cross products.
bool is_orthogonal_decomposition(const Algebra& a, const std::vector<Idempotent>& parts,
                                 std::span<const Residue> target);

/// a in fAe, b in eAf with ab = f and ba = e.
struct EquivalenceWitness {
  Vec a;
  Vec b;
};

/// nullopt when fAe = 0 (e and f inequivalent). Throws WitnessSolveFailed
/// when fAe != 0 but no witness exists, which only happens if e or f is not
/// primitive.
std::optional<EquivalenceWitness> equivalence_witness(const Algebra& a, const Idempotent& e,
                                                      const Idempotent& f);

/// Exact check of the witness relations and corner-space membership.
bool is_valid_witness(const Algebra& a, const Idempotent& e, const Idempotent& f,
                      const EquivalenceWitness& w);

}  // namespace wedderburn
