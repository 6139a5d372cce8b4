#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wedderburn/field.hpp"
#include "wedderburn/matrix.hpp"
#include "wedderburn/polynomial.hpp"

namespace wedderburn {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A finite-dimensional associative unital F_p-algebra given by structure
/// constants c[i][j][k]: b_i b_j = sum_k c[i][j][k] b_k.
///
/// Instances are immutable and always held through AlgebraPtr, so elements
/// can refer back to their parent.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Validating constructor. Checks primality of p, the range of every
  /// constant, associativity on every basis triple, and the identity (which
  /// is solved for when `one` is absent).
  ///
  /// Throws NotPrime, InvalidInput, NotAssociativeError, NoIdentity.
  static AlgebraPtr create(std::uint32_t p, std::size_t dim, Vec structure_constants,
                           std::optional<Vec> one = std::nullopt,
                           std::vector<std::string> labels = {});

  /// Skips the associativity scan. For algebras derived from an already
  /// validated one (corners, coordinate changes) where associativity is
  /// inherited. The identity is still verified.
  static AlgebraPtr create_inherited(std::uint32_t p, std::size_t dim, Vec structure_constants,
                                     Vec one, std::vector<std::string> labels = {});

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }
  std::size_t dim() const noexcept { return dim_; }
  const Vec& structure_constants() const noexcept { return sc_; }
  const Vec& one() const noexcept { return one_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Residue constant(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }
  /// Coordinates of b_i b_j.
  std::span<const Residue> basis_product(std::size_t i, std::size_t j) const {
    return {sc_.data() + (i * dim_ + j) * dim_, dim_};
  }

  Vec multiply(std::span<const Residue> x, std::span<const Residue> y) const;
  Vec power(std::span<const Residue> x, std::uint64_t e) const;
  Vec zero() const { return Vec(dim_, 0); }
  bool is_idempotent(std::span<const Residue> x) const;
  bool is_commutative() const;
  /// Same modulus and identical structure constants.
  bool same_presentation(const Algebra& other) const;

  /// The operator y -> x y; column j holds the coordinates of x b_j.
  Matrix left_regular(std::span<const Residue> x) const;
  /// The operator y -> y x; column j holds the coordinates of b_j x.
  Matrix right_regular(std::span<const Residue> x) const;

 private:
  Algebra(PrimeField field, std::size_t dim, Vec sc, std::vector<std::string> labels);
  void adopt_identity(std::optional<Vec> one);

  PrimeField field_;
  std::size_t dim_;
  Vec sc_;
  Vec one_;
  std::vector<std::string> labels_;
};

/// An element together with its parent algebra.
class Element {
 public:
  Element(AlgebraPtr parent, Vec coords);

  const AlgebraPtr& parent() const noexcept { return parent_; }
  const Vec& coords() const noexcept { return coords_; }
  bool is_zero() const { return vec_is_zero(coords_); }

  friend bool operator==(const Element& a, const Element& b);

 private:
  AlgebraPtr parent_;
  Vec coords_;
};

/// Throw ParentMismatch unless both operands share a presentation.
Element operator*(const Element& x, const Element& y);
Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);

/// Basis of the center {z : z b_i = b_i z for all i}.
std::vector<Vec> center_basis(const Algebra& a);

/// f(x) evaluated in the algebra; the constant term multiplies the identity.
Vec evaluate(const Polynomial& f, const Algebra& a, std::span<const Residue> x);

/// Minimal polynomial of left multiplication by x.
Polynomial element_min_poly(const Algebra& a, std::span<const Residue> x);

/// The corner algebra e A e of an idempotent e.
///
/// The basis lifts are the nonzero rows of the reduced row echelon form of
/// the image of x -> e x e, so the basis is canonical for a given e. The
/// local presentation has identity e.
class CornerAlgebra {
 public:
  /// Arbitrary linearly independent lifts spanning a subalgebra with
  /// identity e. Used to rebuild corners from serialized bases. Returns
  /// nullopt when the lifts are dependent, leave e A e, or are not closed.
  static std::optional<CornerAlgebra> from_basis(AlgebraPtr parent, Vec e, std::vector<Vec> lifts);

  const AlgebraPtr& parent() const noexcept { return parent_; }
  const Vec& idempotent() const noexcept { return e_; }
  const Algebra& local() const noexcept { return *local_; }
  const AlgebraPtr& local_ptr() const noexcept { return local_; }
  std::size_t dim() const noexcept { return lifts_.size(); }
  const std::vector<Vec>& basis_lift() const noexcept { return lifts_; }

  /// Parent coordinates of a local element.
  Vec lift(std::span<const Residue> local_coords) const;
  /// Local coordinates of a parent element, or nullopt if it is outside
  /// the corner's span.
  std::optional<Vec> project(std::span<const Residue> parent_coords) const;

 private:
  friend CornerAlgebra corner(const AlgebraPtr& a, std::span<const Residue> e);
  CornerAlgebra(AlgebraPtr parent, Vec e, std::vector<Vec> lifts, RowEchelon echelon,
                Matrix to_lift_coords);
  void build_local();

  AlgebraPtr parent_;
  Vec e_;
  std::vector<Vec> lifts_;
  RowEchelon echelon_;     // rref of the lifts
  Matrix to_lift_coords_;  // echelon coordinates -> lift coordinates
  AlgebraPtr local_;
};

/// Throws NotIdempotent.
CornerAlgebra corner(const AlgebraPtr& a, std::span<const Residue> e);

/// Basis of f A e.
struct HomSpace {
  Vec f;
  Vec e;
  std::vector<Vec> basis;
};

/// Throws NotIdempotent.
HomSpace hom_space(const Algebra& a, std::span<const Residue> f, std::span<const Residue> e);

/// Matrix of x -> x^p on a commutative algebra; throws NotCommutative.
Matrix frobenius_matrix(const Algebra& a);
inline Matrix frobenius_matrix(const CornerAlgebra& c) { return frobenius_matrix(c.local()); }

/// dim ker(Frobenius - 1) on a commutative algebra.
std::size_t frobenius_fixed_dimension(const Algebra& a);

}  // namespace wedderburn
