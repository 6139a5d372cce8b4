#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wedderburn/field.hpp"
#include "wedderburn/matrix.hpp"

namespace wedderburn {

/// Dense univariate polynomial over F_p, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(PrimeField field) : field_(field) {}
  Polynomial(PrimeField field, Vec coefficients);

  static Polynomial constant(PrimeField field, Residue c);
  /// T^k
  static Polynomial monomial(PrimeField field, std::size_t k);
  /// T - r
  static Polynomial linear(PrimeField field, Residue root);

  const PrimeField& field() const noexcept { return field_; }
  const Vec& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Residue coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  Residue leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Residue evaluate(Residue x) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  PrimeField field_;
  Vec coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Residue s, const Polynomial& a);

/// (quotient, remainder); throws DivisionByZero on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// base^e mod modulus
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

struct Bezout {
  Polynomial s;
  Polynomial t;
  Polynomial gcd;  // monic
};

/// s f + t g = gcd(f, g), gcd monic. Not both zero.
Bezout poly_bezout(const Polynomial& f, const Polynomial& g);
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

struct Factor {
  Polynomial factor;  // monic irreducible
  std::size_t multiplicity;
};

/// Dimension of {v : v^p = v} in F_p[T]/(f), which equals the number of
/// distinct monic irreducible factors of f.
std::size_t berlekamp_fixed_dimension(const Polynomial& f);

/// Complete factorization of f (degree >= 1) into monic irreducibles.
/// Factors are sorted by (degree, coefficients); the random splitting
/// elements come from a generator seeded with `seed`.
std::vector<Factor> berlekamp_factor(const Polynomial& f, std::uint64_t seed = 0);

/// Monic polynomial of least degree annihilating the square matrix M,
/// found as the first linear dependence among vec(I), vec(M), vec(M^2), ...
Polynomial min_poly(const Matrix& m);

/// f(M)
Matrix evaluate(const Polynomial& f, const Matrix& m);

/// Companion matrix of a monic polynomial of degree >= 1.
Matrix companion_matrix(const Polynomial& f);

/// Tracks a growing list of vectors and reports the first one that is a
/// linear combination of its predecessors.
class DependenceFinder {
 public:
  DependenceFinder(PrimeField field, std::size_t length) : field_(field), length_(length) {}

  /// Adds v as vector number k = count(). If v depends on the earlier
  /// vectors, returns c with v = sum_{i<k} c_i v_i and leaves the state
  /// unchanged; otherwise records v and returns an empty result.
  std::optional<Vec> add(std::span<const Residue> v);
  std::size_t count() const noexcept { return rows_.size(); }

 private:
  PrimeField field_;
  std::size_t length_;
  std::vector<Vec> rows_;     // reduced, pivot entry 1
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combos_;   // row_i = sum_j combos_[i][j] v_j
};

}  // namespace wedderburn
