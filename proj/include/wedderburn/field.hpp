#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wedderburn/errors.hpp"

namespace wedderburn {

/// A residue in [0, p). The modulus travels separately in a PrimeField.
using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

/// The prime field F_p for an odd prime p < 2^31.
///
/// Construction checks primality by trial division. All operations are
/// exact; inputs are assumed to be reduced residues.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }
  Residue pow(Residue a, std::uint64_t e) const noexcept;

  /// Number of products of two residues that fit in a uint64 accumulator
  /// before a reduction is required.
  std::uint64_t lazy_limit() const noexcept { return lazy_limit_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t lazy_limit_;
};

bool is_prime(std::uint64_t n);

// Vector helpers over F_p. All vectors must share the same length.
Vec vec_add(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b);
Vec vec_sub(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b);
Vec vec_scale(const PrimeField& f, Residue s, std::span<const Residue> a);
/// a += s * b
void vec_axpy(const PrimeField& f, Residue s, std::span<const Residue> b, std::span<Residue> a);
bool vec_is_zero(std::span<const Residue> a);
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace wedderburn
